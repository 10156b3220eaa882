use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use lapspec::bounds::suites::{bicyclic_suite, eigen_bounds_suite, sum_squares_suite, unicyclic_suite, SuiteReport};
use lapspec::bounds::{
    bicyclic_bounds, eigen_lower_bound_check, eigen_upper_bound, sum_squares_bound, theta_spanning_trees,
    unicyclic_alpha_bound, BoundReport,
};
use lapspec::census::{
    census, emit_census, emit_reports, lds_check, to_json, verify_paper, write_output, Budget, Format, Status, Universe,
};
use lapspec::enumerate::{classify, CycleParams, EnumConfig, Family, FamilyQuery};
use lapspec::graphcore::{canonical_form, degree_profile, graph6, parse_graph, Graph};
use lapspec::spectral::{charpoly_with_limit, invariants, spectrum_numeric, DEFAULT_CHARPOLY_LIMIT, DEFAULT_TOLERANCE};

/// Laplacian spectra, cospectral censuses and spectral bounds for small graphs.
///
/// Graphs are given as expressions: atoms C6, P4, K3, H1, H2, theta(3,2,5),
/// lollipop(5,3), pendant(8,6), H(7,3,2,2), g6:<graph6>; a count prefix
/// such as 3K1 takes disjoint copies; `x` joins and binds tighter than `+`
/// (disjoint union); parentheses group.
#[derive(Parser)]
#[command(name = "lapspec", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format: text, json or csv.
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Largest vertex count to accept or enumerate.
    #[arg(long, global = true)]
    max_n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Numeric Laplacian spectrum, descending.
    Spectrum {
        graph: String,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Exact characteristic polynomial of the Laplacian and the invariants it determines.
    Charpoly { graph: String },
    /// Partition a universe of graphs into cospectral classes.
    Census {
        #[command(flatten)]
        universe: UniverseArgs,
    },
    /// Whether a graph is the only one in its universe with its spectrum; exits 1 if it has a mate.
    Lds {
        graph: String,
        /// Universe family; its vertex count is the graph's.
        #[arg(long, default_value = "all")]
        family: Family,
        /// Use the graphs of a graph6 file as the universe instead.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Run the claim battery; exits 1 if any claim is refuted.
    VerifyPaper {
        /// Largest m in the K_m join identities.
        #[arg(long, default_value_t = 5)]
        max_m: usize,
    },
    /// List one graph per isomorphism class of a family.
    Enumerate {
        #[command(flatten)]
        universe: UniverseArgs,
    },
    /// Evaluate a bound or run an exhaustive bound suite.
    Bounds {
        #[command(subcommand)]
        which: BoundsCommand,
    },
}

#[derive(Args)]
struct UniverseArgs {
    /// tree, unicyclic, bicyclic, all_connected or all.
    #[arg(long, default_value = "all")]
    family: Family,
    /// Vertex count.
    #[arg(long, short)]
    n: Option<usize>,
    /// Edge count range, e.g. 6 or 5..8.
    #[arg(long)]
    edges: Option<String>,
    /// Unicyclic graphs with this cycle length.
    #[arg(long, conflicts_with = "theta")]
    cycle: Option<usize>,
    /// Bicyclic graphs on this theta graph, e.g. 3,2,5.
    #[arg(long)]
    theta: Option<String>,
    /// Read the universe from a graph6 file instead.
    #[arg(long, conflicts_with_all = ["n", "edges", "cycle", "theta"])]
    corpus: Option<PathBuf>,
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// Degree profile and eigenvalue bounds of a graph.
    Graph { graph: String },
    /// Largest d(v)+m(v) over unicyclic graphs on n vertices with a k-cycle.
    Unicyclic { n: usize, k: usize },
    /// Spanning-tree count, degree cap and d(v)+m(v) cap for bicyclic graphs on Theta(r,t,s).
    Bicyclic { n: usize, r: usize, t: usize, s: usize },
    /// Largest square sum of k+1 integers, each at least s, summing to t.
    Squares { s: i64, t: i64, k: usize },
    /// Spanning trees of Theta(r,t,s).
    Trees { r: usize, t: usize, s: usize },
    /// Exhaustive check: unicyclic, bicyclic, squares or eigen.
    Suite { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether every checked claim held.
fn run(cli: Cli) -> Result<bool> {
    let c = &cli.common;
    let config = EnumConfig {
        max_all: c.max_n.unwrap_or(EnumConfig::default().max_all),
        max_family: c.max_n.unwrap_or(EnumConfig::default().max_family),
        jobs: c.jobs,
    };
    let mut ok = true;
    let text = match &cli.command {
        Command::Spectrum { graph, tol } => {
            let g = graph_arg(graph, c)?;
            let spec = spectrum_numeric(&g, *tol)?;
            match c.format {
                Format::Json => to_json("spectrum", &json!({ "graph6": graph6::encode(&g), "spectrum": spec }))?,
                Format::Csv => {
                    let mut out = String::from("index,eigenvalue\n");
                    for (i, v) in spec.values.iter().enumerate() {
                        out.push_str(&format!("{i},{}\n", fixed(*v)));
                    }
                    out
                }
                Format::Text => spec.values.iter().map(|v| format!("{}\n", fixed(*v))).collect(),
            }
        }
        Command::Charpoly { graph } => {
            let g = graph_arg(graph, c)?;
            let p = charpoly_with_limit(&g, c.max_n.unwrap_or(DEFAULT_CHARPOLY_LIMIT))?;
            let inv = invariants(&g)?;
            match c.format {
                Format::Json => to_json(
                    "charpoly",
                    &json!({ "graph6": graph6::encode(&g), "charpoly": p, "invariants": inv }),
                )?,
                Format::Csv => {
                    let mut out = String::from("power,coefficient\n");
                    for (k, coeff) in p.coeffs().iter().enumerate() {
                        out.push_str(&format!("{k},{coeff}\n"));
                    }
                    out
                }
                Format::Text => format!(
                    "{p}\nvertices: {}\nedges: {}\ncomponents: {}\nspanning trees: {}\ndegree square sum: {}\n",
                    inv.n_vertices, inv.n_edges, inv.n_components, inv.spanning_trees, inv.degree_square_sum
                ),
            }
        }
        Command::Census { universe } => {
            let u = universe_arg(universe)?;
            emit_census(&census(&u, &config)?, c.format)?
        }
        Command::Lds { graph, family, corpus } => {
            let g = graph_arg(graph, c)?;
            let u = match corpus {
                Some(path) => corpus_universe(path)?,
                None => Universe::Family(FamilyQuery::new(*family, g.n())),
            };
            let report = lds_check(&g, &u, &config)?;
            ok = report.is_lds;
            match c.format {
                Format::Json => to_json("lds", &report)?,
                Format::Csv => format!(
                    "graph,is_lds,compared,mates\n{},{},{},{}\n",
                    report.graph,
                    report.is_lds,
                    report.compared,
                    report.mates.join(" ")
                ),
                Format::Text => format!(
                    "graph: {}\nuniverse: {}\ncompared: {}\ndetermined by spectrum: {}\nmates: {}\n",
                    report.graph,
                    report.universe,
                    report.compared,
                    report.is_lds,
                    if report.mates.is_empty() {
                        "none".to_string()
                    } else {
                        report.mates.join(" ")
                    }
                ),
            }
        }
        Command::VerifyPaper { max_m } => {
            let budget = Budget {
                max_n: c.max_n.unwrap_or(Budget::default().max_n),
                max_m: *max_m,
                jobs: c.jobs,
            };
            let reports = verify_paper(&budget)?;
            ok = reports.iter().all(|r| r.status != Status::Refuted);
            emit_reports(&reports, c.format)?
        }
        Command::Enumerate { universe } => {
            let u = universe_arg(universe)?;
            let forms = u.forms(&config)?;
            match c.format {
                Format::Json => to_json(
                    "enumeration",
                    &json!({ "universe": u.describe(), "count": forms.len(), "graphs": forms }),
                )?,
                Format::Csv => {
                    let mut out = String::from("graph6,vertices,edges,classification\n");
                    for f in &forms {
                        let g = f.to_graph();
                        out.push_str(&format!("{f},{},{},{}\n", g.n(), g.edge_count(), classify(&g)));
                    }
                    out
                }
                Format::Text => forms.iter().map(|f| format!("{f}\n")).collect(),
            }
        }
        Command::Bounds { which } => {
            let (text, held) = bounds(which, c)?;
            ok = held;
            text
        }
    };
    write_output(c.out.as_deref(), &text)?;
    Ok(ok)
}

/// Twelve decimals, without a sign on values that round to zero.
fn fixed(v: f64) -> String {
    let v = if v.abs() < 5e-13 { 0.0 } else { v };
    format!("{v:.12}")
}

fn graph_arg(expr: &str, c: &Common) -> Result<Graph> {
    let g = parse_graph(expr).with_context(|| format!("parsing graph {expr:?}"))?;
    if let Some(max) = c.max_n {
        if g.n() > max {
            bail!("graph has {} vertices, above --max-n {max}", g.n());
        }
    }
    Ok(g)
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .with_context(|| format!("bad {what} {text:?}"))
        })
        .collect()
}

fn universe_arg(a: &UniverseArgs) -> Result<Universe> {
    if let Some(path) = &a.corpus {
        return corpus_universe(path);
    }
    let Some(n) = a.n else {
        bail!("--n is required unless --corpus is given")
    };
    let mut q = FamilyQuery::new(a.family, n);
    if let Some(edges) = &a.edges {
        let (lo, hi) = match edges.split_once("..") {
            Some((lo, hi)) => (lo.trim(), hi.trim().trim_start_matches('=')),
            None => (edges.as_str(), edges.as_str()),
        };
        q = q.with_edges(
            lo.parse().with_context(|| format!("bad --edges {edges:?}"))?,
            hi.parse().with_context(|| format!("bad --edges {edges:?}"))?,
        );
    }
    if let Some(k) = a.cycle {
        q = q.with_cycle(CycleParams::Cycle { k });
    }
    if let Some(theta) = &a.theta {
        let &[r, t, s] = parse_list(theta, "--theta")?.as_slice() else {
            bail!("--theta takes r,t,s");
        };
        q = q.with_cycle(CycleParams::Theta { r, t, s });
    }
    Ok(Universe::Family(q))
}

fn corpus_universe(path: &Path) -> Result<Universe> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let graphs = graph6::read_corpus(BufReader::new(file)).with_context(|| format!("reading {}", path.display()))?;
    Ok(Universe::Corpus {
        name: path.display().to_string(),
        graphs,
    })
}

fn bound_text(label: &str, b: &BoundReport) -> String {
    let mut out = format!("{label}: {}\n", b.bound_value);
    if let Some(w) = &b.witness {
        out.push_str(&format!("witness: {}\n", serde_json::to_string(w).unwrap_or_default()));
    }
    if let Some(s) = b.satisfied {
        out.push_str(&format!("satisfied: {s}\n"));
    }
    out
}

fn suite_output(report: &SuiteReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => to_json("bound_suite", report)?,
        Format::Csv => {
            let mut out = String::from("class,graphs,max_degree,degree_cap,max_dm,bound,attained_by\n");
            for o in &report.observed {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    o.class,
                    o.graphs,
                    o.max_degree,
                    o.degree_cap.map(|d| d.to_string()).unwrap_or_default(),
                    o.max_dm,
                    o.bound,
                    o.attained_by.join(" ")
                ));
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "{}: {} instances, {} violations\n",
                report.suite,
                report.checked,
                report.violations.len()
            );
            for v in &report.violations {
                out.push_str(&format!("violation {}: {}\n", v.instance, v.detail));
            }
            for o in &report.observed {
                out.push_str(&format!(
                    "{} graphs={} max_degree={}{} max_dm={} bound={} attained={}\n",
                    o.class,
                    o.graphs,
                    o.max_degree,
                    o.degree_cap.map(|d| format!("/{d}")).unwrap_or_default(),
                    o.max_dm,
                    o.bound,
                    o.attained_by.len()
                ));
            }
            out
        }
    })
}

fn bounds(which: &BoundsCommand, c: &Common) -> Result<(String, bool)> {
    let json_or_text = |kind: &str, value: serde_json::Value, text: String| -> Result<String> {
        match c.format {
            Format::Json => Ok(to_json(kind, &value)?),
            Format::Csv => bail!("csv output is only available for bound suites"),
            Format::Text => Ok(text),
        }
    };
    Ok(match which {
        BoundsCommand::Graph { graph } => {
            let g = graph_arg(graph, c)?;
            let profile = degree_profile(&g);
            let upper = eigen_upper_bound(&g)?;
            let lower = eigen_lower_bound_check(&g, DEFAULT_TOLERANCE)?;
            let held = upper.satisfied == Some(true) && lower.consistent();
            let text = format!(
                "graph: {}\nmax degree: {}\nlambda_max: {:.12}\n{}lower bound max degree + 1 holds: {}\n\
                 equality observed: {}\nequality predicted: {}\n",
                canonical_form(&g),
                profile.max_degree,
                lower.lambda_max,
                bound_text("max d(v)+m(v)", &upper),
                lower.bound_holds,
                lower.equality_observed,
                lower.equality_predicted
            );
            let value = json!({ "graph6": graph6::encode(&g), "upper": upper, "lower": lower });
            (json_or_text("graph_bounds", value, text)?, held)
        }
        BoundsCommand::Unicyclic { n, k } => {
            let b = unicyclic_alpha_bound(*n, *k)?;
            let text = bound_text("max d(v)+m(v)", &b);
            (json_or_text("unicyclic_bound", serde_json::to_value(&b)?, text)?, true)
        }
        BoundsCommand::Bicyclic { n, r, t, s } => {
            let b = bicyclic_bounds(*n, *r, *t, *s)?;
            let text = format!(
                "spanning trees: {}\ndegree cap: {}\nmax d(v)+m(v) cap: {}\n",
                b.tree_count, b.degree_cap, b.alpha_cap
            );
            (json_or_text("bicyclic_bounds", serde_json::to_value(&b)?, text)?, true)
        }
        BoundsCommand::Squares { s, t, k } => {
            let b = sum_squares_bound(*s, *t, *k)?;
            let text = bound_text("max square sum", &b);
            (
                json_or_text("sum_squares_bound", serde_json::to_value(&b)?, text)?,
                true,
            )
        }
        BoundsCommand::Trees { r, t, s } => {
            let count = theta_spanning_trees(*r, *t, *s)?;
            let value = json!({ "r": r, "t": t, "s": s, "spanning_trees": count.to_string() });
            (json_or_text("theta_spanning_trees", value, format!("{count}\n"))?, true)
        }
        BoundsCommand::Suite { name } => {
            let report = match name.as_str() {
                "unicyclic" => unicyclic_suite(c.max_n.unwrap_or(9), c.jobs)?,
                "bicyclic" => bicyclic_suite(c.max_n.unwrap_or(9), c.jobs)?,
                "squares" => sum_squares_suite(3, 4, 20)?,
                "eigen" => eigen_bounds_suite(c.max_n.unwrap_or(8), DEFAULT_TOLERANCE, c.jobs)?,
                other => bail!("unknown suite {other:?}; expected unicyclic, bicyclic, squares or eigen"),
            };
            (suite_output(&report, c.format)?, report.passed())
        }
    })
}

//! A small expression language for building graphs.
//!
//! ```text
//! expr   := term ('+' term)*            disjoint union
//! term   := factor ('x' factor)*        join, binds tighter than '+'
//! factor := [count] (atom | '(' expr ')')
//! atom   := C<n> | P<n> | K<n> | H1 | H2
//!         | theta(r,t,s[,bridge]) | lollipop(n,k) | pendant(n,k)
//!         | H(n,q,n1,n2) | g6:<graph6>
//! ```
//!
//! A count prefix takes that many disjoint copies, so `2K1 x (2P2 + K1)`
//! is the join of two isolated vertices with two edges and a vertex.
//! A `g6:` atom reads graph6 characters up to the first character outside
//! the graph6 alphabet or a space, so write `g6:Cl x K1`, not `g6:ClxK1`.
//!
//! ```
//! use lapspec::graphcore::expr::parse_graph;
//!
//! let h1 = parse_graph("2K1 x (2P2 + K1)").unwrap();
//! assert_eq!((h1.n(), h1.edge_count()), (7, 12));
//! ```

use super::{
    build_named, build_theta, complete, copies, cycle, disjoint_union, graph6, join, path, Graph, Named, ThetaSpec,
};
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let g = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected {:?}", p.src[p.pos] as char)));
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: impl Into<String>) -> Error {
        Error::Expr {
            offset: self.pos,
            reason: reason.into(),
        }
    }

    /// Converts an error from a builder into one located at `offset`.
    fn at(&self, offset: usize, e: Error) -> Error {
        Error::Expr {
            offset,
            reason: e.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected {:?}", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Graph> {
        let mut g = self.term()?;
        while self.eat(b'+') {
            g = disjoint_union(&g, &self.term()?);
        }
        Ok(g)
    }

    fn term(&mut self) -> Result<Graph> {
        let mut g = self.factor()?;
        while self.eat(b'x') || self.eat(b'*') {
            g = join(&g, &self.factor()?);
        }
        Ok(g)
    }

    fn number(&mut self) -> Option<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn required_number(&mut self) -> Result<usize> {
        self.number().ok_or_else(|| self.error("expected a number"))
    }

    fn factor(&mut self) -> Result<Graph> {
        let count = self.number();
        let start = self.pos;
        let g = if self.eat(b'(') {
            let inner = self.expr()?;
            self.expect(b')')?;
            inner
        } else {
            self.atom()?
        };
        Ok(match count {
            Some(k) => {
                if k.saturating_mul(g.n()) > super::MAX_VERTICES {
                    return Err(self.at(
                        start,
                        Error::TooManyVertices {
                            n: k * g.n(),
                            max: super::MAX_VERTICES,
                        },
                    ));
                }
                copies(&g, k)
            }
            None => g,
        })
    }

    fn args(&mut self) -> Result<Vec<usize>> {
        self.expect(b'(')?;
        let mut out = vec![self.required_number()?];
        while self.eat(b',') {
            out.push(self.required_number()?);
        }
        self.expect(b')')?;
        Ok(out)
    }

    fn atom(&mut self) -> Result<Graph> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        if name.is_empty() {
            return Err(self.error("expected a graph"));
        }
        let built = match name {
            "g" if self.src[self.pos..].starts_with(b"6:") => {
                self.pos += 2;
                let body = self.pos;
                while self.src.get(self.pos).is_some_and(|&b| (63..=126).contains(&b)) {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[body..self.pos]).expect("ascii");
                graph6::decode(text).map_err(|e| self.at(body, e))?
            }
            "C" | "P" | "K" => {
                let n = self.required_number()?;
                match name {
                    "C" => cycle(n),
                    "P" => path(n),
                    _ => complete(n),
                }
                .map_err(|e| self.at(start, e))?
            }
            "H" if self.src.get(self.pos) == Some(&b'1') => {
                self.pos += 1;
                build_named(Named::H1)?
            }
            "H" if self.src.get(self.pos) == Some(&b'2') => {
                self.pos += 1;
                build_named(Named::H2)?
            }
            "H" | "theta" | "lollipop" | "pendant" => {
                let a = self.args()?;
                let built = match (name, a.as_slice()) {
                    ("H", &[n, q, n1, n2]) => build_named(Named::H { n, q, n1, n2 }),
                    ("theta", &[r, t, s]) => ThetaSpec::new(r, t, s).and_then(build_theta),
                    ("theta", &[r, t, s, b]) => ThetaSpec::with_bridge(r, t, s, b).and_then(build_theta),
                    ("lollipop", &[n, k]) => build_named(Named::Lollipop { n, k }),
                    ("pendant", &[n, k]) => build_named(Named::PendantCycle { n, k }),
                    _ => {
                        return Err(Error::Expr {
                            offset: start,
                            reason: format!("wrong number of arguments for {name}"),
                        })
                    }
                };
                built.map_err(|e| self.at(start, e))?
            }
            other => {
                return Err(Error::Expr {
                    offset: start,
                    reason: format!("unknown graph {other:?}"),
                })
            }
        };
        Ok(built)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::is_isomorphic;

    fn parse(s: &str) -> Graph {
        parse_graph(s).unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    #[test]
    fn atoms() {
        assert_eq!(parse("C6"), cycle(6).unwrap());
        assert_eq!(parse("K4").edge_count(), 6);
        assert_eq!(parse("P4").edge_count(), 3);
        assert_eq!(parse("3K1"), Graph::empty(3).unwrap());
        assert_eq!(parse("theta(3,2,5)").edge_count(), 7);
        assert_eq!(parse("theta(3,0,3,1)").n(), 7);
        assert_eq!(parse("lollipop(5,3)").n(), 5);
        assert_eq!(parse("pendant(8,6)").max_degree(), 4);
        assert_eq!(parse("H(7,3,2,2)").n(), 7);
        assert_eq!(parse("g6:Cl"), cycle(4).unwrap());
    }

    #[test]
    fn operators() {
        assert!(is_isomorphic(
            &parse("2K1 x (2P2 + K1)"),
            &build_named(Named::H1).unwrap()
        ));
        assert!(is_isomorphic(&parse("2K1 x (P4+K1)"), &build_named(Named::H2).unwrap()));
        // join binds tighter than union
        assert_eq!(parse("K1 x K1 + K1").edge_count(), 1);
        assert_eq!(parse("K1 x (K1 + K1)").edge_count(), 2);
        assert_eq!(parse("C6 * K1"), parse("C6xK1"));
        assert_eq!(parse("g6:Cl x K1").edge_count(), 8);
        assert_eq!(parse("2(P2 + K1)").n(), 6);
    }

    #[test]
    fn errors_carry_offsets() {
        let offset = |s: &str| match parse_graph(s) {
            Err(Error::Expr { offset, .. }) => offset,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(offset("C6 + Q3"), 5);
        assert_eq!(offset("C2"), 0);
        assert_eq!(offset("(C6"), 3);
        assert_eq!(offset("C6 )"), 3);
        assert_eq!(offset("theta(3,2)"), 0);
        assert_eq!(offset("g6:C"), 3);
        assert_eq!(offset(""), 0);
    }
}

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laplacian::{charpoly, laplacian};
use super::poly::CharPoly;
use crate::error::{Error, Result};
use crate::graphcore::{connected_components, Graph};

/// The quantities a Laplacian spectrum determines: vertices, edges,
/// components, spanning trees and the sum of squared degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpectralInvariants {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub n_components: usize,
    #[serde(with = "biguint_decimal")]
    pub spanning_trees: BigUint,
    pub degree_square_sum: u64,
}

/// Reads the invariants off the coefficients:
/// `2|E| = -c_{n-1}`, components = multiplicity of 0,
/// spanning trees = `|c_1| / n` when connected, and
/// `sum d^2 = (c_{n-1}^2 - 2 c_{n-2}) - 2|E|` from the second power sum.
pub fn invariants_from_charpoly(p: &CharPoly) -> Result<SpectralInvariants> {
    if !p.is_laplacian_shaped() {
        return Err(Error::Inconsistent(format!("{p} is not a Laplacian polynomial")));
    }
    let n = p.degree();
    if n == 0 {
        return Ok(SpectralInvariants {
            n_vertices: 0,
            n_edges: 0,
            n_components: 0,
            spanning_trees: BigUint::zero(),
            degree_square_sum: 0,
        });
    }
    let bad = |what: &str| Error::Inconsistent(format!("{what} read from {p}"));
    let e1 = -p.coeff(n - 1);
    let (half, odd) = e1.div_rem(&BigInt::from(2));
    if !odd.is_zero() {
        return Err(bad("odd degree sum"));
    }
    let n_edges = half.to_usize().ok_or_else(|| bad("edge count"))?;
    let n_components = p.lowest_nonzero();
    let spanning_trees = if n_components == 1 {
        let (q, r) = p.coeff(1).magnitude().div_rem(&BigUint::from(n));
        if !r.is_zero() {
            return Err(bad("spanning tree count not divisible by n"));
        }
        q
    } else {
        BigUint::zero()
    };
    let c_second = if n >= 2 { p.coeff(n - 2) } else { BigInt::zero() };
    let p2 = &e1 * &e1 - BigInt::from(2) * c_second;
    let degree_square_sum = (p2 - BigInt::from(2 * n_edges))
        .to_u64()
        .ok_or_else(|| bad("degree square sum"))?;
    Ok(SpectralInvariants {
        n_vertices: n,
        n_edges,
        n_components,
        spanning_trees,
        degree_square_sum,
    })
}

/// The same invariants computed combinatorially, with spanning trees from
/// the Matrix-Tree theorem.
pub fn direct_invariants(g: &Graph) -> SpectralInvariants {
    let (n_components, _) = connected_components(g);
    SpectralInvariants {
        n_vertices: g.n(),
        n_edges: g.edge_count(),
        n_components,
        spanning_trees: spanning_trees_matrix_tree(g),
        degree_square_sum: g.degrees().iter().map(|&d| (d * d) as u64).sum(),
    }
}

pub fn invariants(g: &Graph) -> Result<SpectralInvariants> {
    invariants_from_charpoly(&charpoly(g)?)
}

/// Spanning trees as the determinant of `L` with row and column 0 removed,
/// by fraction-free (Bareiss) elimination.
pub fn spanning_trees_matrix_tree(g: &Graph) -> BigUint {
    let n = g.n();
    if n == 0 {
        return BigUint::zero();
    }
    let l = laplacian(g);
    let mut m: Vec<Vec<BigInt>> = l[1..]
        .iter()
        .map(|row| row[1..].iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let det = bareiss_determinant(&mut m);
    match det.sign() {
        Sign::Minus => unreachable!("reduced Laplacian is positive semidefinite"),
        _ => det.magnitude().clone(),
    }
}

fn bareiss_determinant(m: &mut [Vec<BigInt>]) -> BigInt {
    let k = m.len();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for i in 0..k {
        if m[i][i].is_zero() {
            let Some(swap) = (i + 1..k).find(|&r| !m[r][i].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(i, swap);
            sign = -sign;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let v = &m[r][c] * &m[i][i] - &m[r][i] * &m[i][c];
                m[r][c] = v / &prev;
            }
            m[r][i] = BigInt::zero();
        }
        prev = m[i][i].clone();
    }
    prev * sign
}

mod biguint_decimal {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigUint, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

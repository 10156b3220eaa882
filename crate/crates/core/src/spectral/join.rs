use super::poly::CharPoly;
use crate::error::{Error, Result};

/// Laplacian polynomial of the join `G x H` from those of `G` and `H`.
///
/// If `G` has spectrum `{mu_1..mu_{n-1}, 0}` and `H` has `{nu_1..nu_{m-1}, 0}`,
/// the join has `{n+m, m+mu_i, n+nu_j, 0}`. On polynomials that is
///
/// `p(x) = x (x - (n+m)) q_G(x - m) q_H(x - n)` with `q(x) = p(x) / x`,
///
/// so the identity is applied without ever leaving the integers.
pub fn join_spectrum(p_g: &CharPoly, p_h: &CharPoly) -> Result<CharPoly> {
    let n = p_g.degree() as i64;
    let m = p_h.degree() as i64;
    let q_g = p_g.div_linear(0).ok_or(Error::MissingZeroEigenvalue)?;
    let q_h = p_h.div_linear(0).ok_or(Error::MissingZeroEigenvalue)?;
    Ok(CharPoly::from_integer_roots(&[0, n + m])
        .mul(&q_g.shift(m))
        .mul(&q_h.shift(n)))
}

/// Laplacian polynomial of `K_m`: `x (x - m)^(m-1)`.
pub fn complete_charpoly(m: usize) -> CharPoly {
    let mut roots = vec![m as i64; m.saturating_sub(1)];
    if m > 0 {
        roots.push(0);
    }
    CharPoly::from_integer_roots(&roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_join_k1() {
        // C4: {4,2,2,0} joined with K1 gives {5,5,3,3,0}
        let c4 = CharPoly::from_integer_roots(&[4, 2, 2, 0]);
        let k1 = CharPoly::from_integer_roots(&[0]);
        assert_eq!(
            join_spectrum(&c4, &k1).unwrap(),
            CharPoly::from_integer_roots(&[5, 5, 3, 3, 0])
        );
    }

    #[test]
    fn h1_from_factors() {
        let two_k1 = CharPoly::from_integer_roots(&[0, 0]);
        let inner = CharPoly::from_integer_roots(&[2, 2, 0, 0, 0]);
        let expected = CharPoly::from_integer_roots(&[7, 5, 4, 4, 2, 2, 0]);
        assert_eq!(join_spectrum(&two_k1, &inner).unwrap(), expected);
        let c6 = CharPoly::from_integer_roots(&[4, 3, 3, 1, 1, 0]);
        let k1 = CharPoly::from_integer_roots(&[0]);
        assert_eq!(join_spectrum(&c6, &k1).unwrap(), expected);
    }

    #[test]
    fn needs_zero_eigenvalue() {
        let bad = CharPoly::from_integer_roots(&[2, 1]);
        let k1 = CharPoly::from_integer_roots(&[0]);
        assert_eq!(join_spectrum(&bad, &k1), Err(Error::MissingZeroEigenvalue));
        assert_eq!(join_spectrum(&k1, &CharPoly::one()), Err(Error::MissingZeroEigenvalue));
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(complete_charpoly(1), CharPoly::from_integer_roots(&[0]));
        assert_eq!(complete_charpoly(3), CharPoly::from_integer_roots(&[3, 3, 0]));
        let k1 = complete_charpoly(1);
        let mut km = k1.clone();
        for m in 2..6 {
            km = join_spectrum(&km, &k1).unwrap();
            assert_eq!(km, complete_charpoly(m));
        }
    }
}

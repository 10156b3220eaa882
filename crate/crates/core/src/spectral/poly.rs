use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Integer polynomial `c_0 + c_1 x + ... + c_n x^n`, coefficients low to high.
///
/// As a Laplacian characteristic polynomial `det(xI - L)` it is the exact
/// carrier of a Laplacian spectrum: two graphs are cospectral iff their
/// `CharPoly` values are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// Trailing zero high-order coefficients are dropped.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> CharPoly {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        CharPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> CharPoly {
        CharPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `prod (x - root)` over the given integer roots.
    pub fn from_integer_roots(roots: &[i64]) -> CharPoly {
        roots
            .iter()
            .fold(CharPoly::one(), |acc, &r| acc.mul(&CharPoly::linear(r)))
    }

    pub fn one() -> CharPoly {
        CharPoly::from_i64(&[1])
    }

    /// `x - root`.
    pub fn linear(root: i64) -> CharPoly {
        CharPoly::from_i64(&[-root, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `c_k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Index of the lowest nonzero coefficient, i.e. the multiplicity of 0.
    pub fn lowest_nonzero(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CharPoly::from_coeffs(out)
    }

    /// `p(x - a)`.
    pub fn shift(&self, a: i64) -> CharPoly {
        let lin = CharPoly::linear(a);
        let mut acc = CharPoly::from_i64(&[0]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin);
            acc.coeffs[0] += c;
        }
        acc
    }

    /// Divides by `x - root`; `None` when the division leaves a remainder.
    pub fn div_linear(&self, root: i64) -> Option<CharPoly> {
        if self.degree() == 0 {
            return None;
        }
        let root = BigInt::from(root);
        let n = self.degree();
        let mut quotient = vec![BigInt::zero(); n];
        let mut carry = BigInt::zero();
        for k in (0..n).rev() {
            carry = &self.coeffs[k + 1] + &carry * &root;
            quotient[k] = carry.clone();
        }
        let remainder = &self.coeffs[0] + &carry * &root;
        remainder.is_zero().then(|| CharPoly::from_coeffs(quotient))
    }

    /// Multiplicity of the integer `root`.
    pub fn multiplicity(&self, root: i64) -> usize {
        let mut p = self.clone();
        let mut count = 0;
        while let Some(q) = p.div_linear(root) {
            p = q;
            count += 1;
        }
        count
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + bigint_to_f64(c))
    }

    /// Laplacian polynomial sanity: monic, vanishing at 0 when non-constant,
    /// and coefficients alternating in sign so every root is real non-negative.
    pub fn is_laplacian_shaped(&self) -> bool {
        let n = self.degree();
        if !self.is_monic() {
            return false;
        }
        if n > 0 && !self.coeffs[0].is_zero() {
            return false;
        }
        self.coeffs.iter().enumerate().all(|(k, c)| {
            if (n - k).is_multiple_of(2) {
                !c.is_negative()
            } else {
                !c.is_positive()
            }
        })
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            wrote = true;
            let show_mag = k == 0 || !mag.is_one();
            match (show_mag, k) {
                (_, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "{mag}x")?,
                (false, 1) => f.write_str("x")?,
                (true, _) => write!(f, "{mag}x^{k}")?,
                (false, _) => write!(f, "x^{k}")?,
            }
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

/// Serialized as a list of decimal strings, low degree first.
impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CharPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CharPoly::from_coeffs(coeffs))
    }
}

//! Model parameters `(α, β, ω)` and the derived pole location `b`.

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::rational::{fmt_rational, int, rat};
use crate::exact::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SystemParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub omega: Rational,
    /// `(α + β) / (β - α)`
    pub b: Rational,
}

impl SystemParams {
    /// Validates `α, β > -1/2`, `α ≠ β`, `|b| > 1` and `ω > 0`.
    pub fn new(alpha: Rational, beta: Rational, omega: Rational) -> Result<Self> {
        let half = rat(1, 2);
        if alpha <= -half.clone() || beta <= -half {
            return Err(Error::InvalidParams(format!(
                "alpha and beta must exceed -1/2 (got {alpha}, {beta})"
            )));
        }
        if alpha == beta {
            return Err(Error::InvalidParams("alpha = beta leaves b undefined".into()));
        }
        if omega <= Rational::zero() {
            return Err(Error::InvalidParams(format!("omega must be positive (got {omega})")));
        }
        let b = (&alpha + &beta) / (&beta - &alpha);
        if b.abs() <= Rational::one() {
            return Err(Error::InvalidParams(format!(
                "|b| = |{b}| <= 1 puts a pole of the potential inside the wedge"
            )));
        }
        Ok(SystemParams { alpha, beta, omega, b })
    }

    /// `(1, 2, 1)`, the reference instance.
    pub fn reference() -> Self {
        SystemParams::from_ints(1, 2, 1)
    }

    pub fn from_ints(alpha: i64, beta: i64, omega: i64) -> Self {
        SystemParams::new(int(alpha), int(beta), int(omega))
            .map_err(|e| e.to_string())
            .expect("valid integer parameters")
    }

    /// Same `(α, β)` with another `ω`.
    pub fn with_omega(&self, omega: Rational) -> Result<Self> {
        SystemParams::new(self.alpha.clone(), self.beta.clone(), omega)
    }

    /// `α - β`
    pub fn delta(&self) -> Rational {
        &self.alpha - &self.beta
    }

    /// `α² - αβ + β²`
    pub fn sigma(&self) -> Rational {
        &self.alpha * &self.alpha - &self.alpha * &self.beta + &self.beta * &self.beta
    }

    /// Angular separation constant `C_n = 2n + α + β + 1`.
    pub fn c_n(&self, n: u32) -> Rational {
        Rational::from_integer((2 * n as i64 + 1).into()) + &self.alpha + &self.beta
    }
}

impl std::fmt::Display for SystemParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(alpha={}, beta={}, omega={})",
            fmt_rational(&self.alpha),
            fmt_rational(&self.beta),
            fmt_rational(&self.omega)
        )
    }
}

impl Serialize for SystemParams {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SystemParams", 4)?;
        st.serialize_field("alpha", &fmt_rational(&self.alpha))?;
        st.serialize_field("beta", &fmt_rational(&self.beta))?;
        st.serialize_field("omega", &fmt_rational(&self.omega))?;
        st.serialize_field("b", &fmt_rational(&self.b))?;
        st.end()
    }
}

/// Serialize a rational as its `p/q` string.
pub fn ser_rational<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(q))
}

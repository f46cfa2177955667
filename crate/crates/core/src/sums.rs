//! Brute-force character sums, point counts and zero counts.
//!
//! Everything here enumerates `F_q`, so each entry point is guarded by a
//! budget on the number of evaluations.

use rayon::prelude::*;

use crate::arith::isqrt_ceil;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::poly::Poly;

/// Default cap on the number of field elements (or pairs) enumerated.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

const PARALLEL_THRESHOLD: u64 = 1 << 15;

pub(crate) fn check_budget(work: u64, q: u64, budget: u64) -> Result<()> {
    if work > budget {
        Err(Error::BudgetExceeded { q, budget })
    } else {
        Ok(())
    }
}

/// `Σ_{x ∈ F_q} σ(f(x))` together with its argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSum {
    pub value: i64,
    pub q: u64,
    pub f: Poly,
}

impl CharSum {
    /// `(deg f - 1) * ceil(sqrt q)`, or `None` when `f` is constant.
    pub fn weil_bound(&self) -> Option<i64> {
        match self.f.degree() {
            Some(d) if d >= 1 => Some((d as i64 - 1) * isqrt_ceil(self.q) as i64),
            _ => None,
        }
    }

    /// Checks `|S_f| <= (deg f - 1) ceil(sqrt q)`. Only meaningful for
    /// square-free `f`; returns `None` when `f` is not square-free or constant.
    pub fn within_weil_bound(&self) -> Option<bool> {
        let bound = self.weil_bound()?;
        if !self.f.is_square_free().ok()? {
            return None;
        }
        Some(self.value.abs() <= bound)
    }
}

/// Sum of `σ(f(x))` over the field. The zero polynomial sums to zero.
pub fn char_sum(f: &Poly) -> Result<CharSum> {
    char_sum_with_budget(f, DEFAULT_BUDGET)
}

pub fn char_sum_with_budget(f: &Poly, budget: u64) -> Result<CharSum> {
    let field = f.field();
    let q = field.q();
    check_budget(q, q, budget)?;
    Ok(CharSum {
        value: raw_char_sum(f),
        q,
        f: f.clone(),
    })
}

pub(crate) fn raw_char_sum(f: &Poly) -> i64 {
    let field = f.field();
    let q = field.q();
    let term = |i: u64| field.r_sigma(f.r_eval(field.r_from_index(i))) as i64;
    if q >= PARALLEL_THRESHOLD {
        (0..q).into_par_iter().map(term).sum()
    } else {
        (0..q).map(term).sum()
    }
}

/// Closed form for degree 1 and 2: `0`, respectively `-σ(lc)` when the
/// discriminant is nonzero and `σ(lc)(q - 1)` when `f` is a constant times a square.
pub fn closed_form_low_degree(f: &Poly) -> Result<i64> {
    match f.degree() {
        Some(1) => Ok(0),
        Some(2) => {
            let lc = f.leading().expect("degree 2").sigma() as i64;
            if f.discriminant()?.is_zero() {
                Ok(lc * (f.field().q() as i64 - 1))
            } else {
                Ok(-lc)
            }
        }
        d => Err(Error::WrongDegree(format!(
            "expected degree 1 or 2, got {d:?}"
        ))),
    }
}

/// `#{(x, y) : y^2 = f(x)} = q + S_f`.
pub fn point_count(f: &Poly) -> Result<u64> {
    point_count_with_budget(f, DEFAULT_BUDGET)
}

pub fn point_count_with_budget(f: &Poly, budget: u64) -> Result<u64> {
    let s = char_sum_with_budget(f, budget)?;
    Ok((s.q as i64 + s.value) as u64)
}

/// `n_f`: number of roots in `F_q`; `q` for the zero polynomial.
pub fn zero_count(f: &Poly) -> u64 {
    f.distinct_root_count()
}

/// `n_{f,g,h}`: number of common roots in `F_q`.
pub fn common_zero_count(f: &Poly, g: &Poly, h: &Poly) -> Result<u64> {
    let d = f.gcd(g)?.gcd(h)?;
    Ok(zero_count(&d))
}

/// Number of `(x, y)` with `f(x) y^2 + g(x) y + h(x) = 0`, computed as
/// `q (1 + n_{f,g,h}) - n_f + Σ σ(g^2 - 4fh)`.
pub fn quadratic_in_y_count(f: &Poly, g: &Poly, h: &Poly) -> Result<u64> {
    quadratic_in_y_count_with_budget(f, g, h, DEFAULT_BUDGET)
}

pub fn quadratic_in_y_count_with_budget(f: &Poly, g: &Poly, h: &Poly, budget: u64) -> Result<u64> {
    if f.is_zero() && g.is_zero() && h.is_zero() {
        return Err(Error::AllZero);
    }
    let field: &FiniteField = f.field();
    let q = field.q() as i64;
    let disc = g * g - (f * h).scale(&field.elem(4));
    let s = char_sum_with_budget(&disc, budget)?.value;
    let n_fgh = common_zero_count(f, g, h)? as i64;
    let n_f = zero_count(f) as i64;
    Ok((q * (1 + n_fgh) - n_f + s) as u64)
}

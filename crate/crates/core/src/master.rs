//! Coefficient matrices of bi-quadratic forms
//! `F(u, x) = (u^2, u, 1) M (x^2, x, 1)^T` and the double-counting identity
//! that compares the two ways of solving `F(u, x) = 0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField, Repr};
use crate::poly::Poly;
use crate::sums::{self, check_budget, common_zero_count, zero_count, DEFAULT_BUDGET};

/// Rows are indexed by `u^2, u, 1`, columns by `x^2, x, 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct CoeffMatrix3 {
    field: FiniteField,
    entries: [[Repr; 3]; 3],
}

impl CoeffMatrix3 {
    pub fn new(field: &FiniteField, entries: [[FieldElement; 3]; 3]) -> Result<Self> {
        let mut raw = [[Repr::ZERO; 3]; 3];
        for (r, row) in entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if e.field() != field {
                    return Err(Error::FieldMismatch);
                }
                raw[r][c] = e.repr;
            }
        }
        Ok(CoeffMatrix3 {
            field: field.clone(),
            entries: raw,
        })
    }

    pub fn from_ints(field: &FiniteField, entries: [[i64; 3]; 3]) -> Self {
        CoeffMatrix3 {
            field: field.clone(),
            entries: entries.map(|row| row.map(|e| field.r_from_i64(e))),
        }
    }

    /// Nine comma-separated integers in row-major order.
    pub fn parse(field: &FiniteField, text: &str) -> Result<Self> {
        let vals = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad matrix entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let vals: [i64; 9] = vals.try_into().map_err(|v: Vec<i64>| {
            Error::Parse(format!("expected 9 matrix entries, got {}", v.len()))
        })?;
        Ok(Self::from_ints(
            field,
            [
                [vals[0], vals[1], vals[2]],
                [vals[3], vals[4], vals[5]],
                [vals[6], vals[7], vals[8]],
            ],
        ))
    }

    pub fn zero(field: &FiniteField) -> Self {
        Self::from_ints(field, [[0; 3]; 3])
    }

    pub fn identity(field: &FiniteField) -> Self {
        Self::from_ints(field, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn entry(&self, row: usize, col: usize) -> FieldElement {
        self.field.wrap(self.entries[row][col])
    }

    pub fn transpose(&self) -> Self {
        let e = &self.entries;
        CoeffMatrix3 {
            field: self.field.clone(),
            entries: [
                [e[0][0], e[1][0], e[2][0]],
                [e[0][1], e[1][1], e[2][1]],
                [e[0][2], e[1][2], e[2][2]],
            ],
        }
    }

    fn quadratic(&self, c2: Repr, c1: Repr, c0: Repr) -> Poly {
        Poly::new(
            &self.field,
            vec![
                self.field.wrap(c0),
                self.field.wrap(c1),
                self.field.wrap(c2),
            ],
        )
    }

    /// `(α, β, γ)`: row `i` read as `m_{i1} x^2 + m_{i2} x + m_{i3}`.
    pub fn row_polys(&self) -> (Poly, Poly, Poly) {
        let [a, b, c] = self.entries.map(|r| self.quadratic(r[0], r[1], r[2]));
        (a, b, c)
    }

    /// `(δ_1, δ_2, δ_3)`: column `j` read as `m_{1j} u^2 + m_{2j} u + m_{3j}`.
    pub fn down_polys(&self) -> (Poly, Poly, Poly) {
        let e = &self.entries;
        let [d1, d2, d3] = [0, 1, 2].map(|j| self.quadratic(e[0][j], e[1][j], e[2][j]));
        (d1, d2, d3)
    }

    /// `β^2 - 4αγ`, the discriminant of `F` as a quadratic in `u`.
    pub fn row_discriminant(&self) -> Poly {
        let (a, b, c) = self.row_polys();
        &b * &b - (&a * &c).scale(&self.field.elem(4))
    }

    /// `δ_2^2 - 4 δ_1 δ_3`, the discriminant of `F` as a quadratic in `x`.
    pub fn down_discriminant(&self) -> Poly {
        let (d1, d2, d3) = self.down_polys();
        &d2 * &d2 - (&d1 * &d3).scale(&self.field.elem(4))
    }

    #[inline]
    fn r_row_vector(&self, u: Repr) -> [Repr; 3] {
        let f = &self.field;
        let powers = [f.r_mul(u, u), u, f.r_one()];
        let mut w = [Repr::ZERO; 3];
        for (j, slot) in w.iter_mut().enumerate() {
            for (i, &pw) in powers.iter().enumerate() {
                *slot = f.r_add(*slot, f.r_mul(pw, self.entries[i][j]));
            }
        }
        w
    }

    #[inline]
    fn r_eval(&self, w: &[Repr; 3], x: Repr) -> Repr {
        let f = &self.field;
        let x2 = f.r_mul(x, x);
        f.r_add(f.r_add(f.r_mul(w[0], x2), f.r_mul(w[1], x)), w[2])
    }

    /// `F(u, x)` straight from the matrix product.
    pub fn eval_form(&self, u: &FieldElement, x: &FieldElement) -> FieldElement {
        assert!(
            u.field() == &self.field && x.field() == &self.field,
            "point from a different field"
        );
        let w = self.r_row_vector(u.repr);
        self.field.wrap(self.r_eval(&w, x.repr))
    }

    /// `#{(u, x) : F(u, x) = 0}` by enumerating all `q^2` pairs.
    pub fn count_zeros(&self, budget: u64) -> Result<u64> {
        let f = &self.field;
        let q = f.q();
        check_budget(q.saturating_mul(q), q, budget)?;
        let mut n = 0;
        for ui in 0..q {
            let w = self.r_row_vector(f.r_from_index(ui));
            for xi in 0..q {
                if self.r_eval(&w, f.r_from_index(xi)).is_zero() {
                    n += 1;
                }
            }
        }
        Ok(n)
    }
}

impl fmt::Debug for CoeffMatrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..3)
            .map(|r| {
                (0..3)
                    .map(|c| self.entry(r, c).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "[{}] over {}", rows.join(" | "), self.field)
    }
}

/// The three normalized counts of the master identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MasterSides {
    /// `q n_{α,β,γ} - n_α + Σ σ(β^2 - 4αγ)`
    pub lhs: i64,
    /// `q n_{δ1,δ2,δ3} - n_{δ1} + Σ σ(δ_2^2 - 4δ_1δ_3)`
    pub rhs: i64,
    /// `#{F(u, x) = 0} - q`
    pub brute: i64,
}

impl MasterSides {
    pub fn agree(&self) -> bool {
        self.lhs == self.rhs && self.rhs == self.brute
    }
}

fn side(q: i64, f: &Poly, g: &Poly, h: &Poly, disc: &Poly, budget: u64) -> Result<i64> {
    let common = common_zero_count(f, g, h)? as i64;
    let lead = zero_count(f) as i64;
    let s = sums::char_sum_with_budget(disc, budget)?.value;
    Ok(q * common - lead + s)
}

pub fn master_sides(m: &CoeffMatrix3) -> Result<MasterSides> {
    master_sides_with_budget(m, DEFAULT_BUDGET)
}

/// The budget caps the `q^2` pair enumeration behind `brute`.
pub fn master_sides_with_budget(m: &CoeffMatrix3, budget: u64) -> Result<MasterSides> {
    let q = m.field().q() as i64;
    let (a, b, c) = m.row_polys();
    let (d1, d2, d3) = m.down_polys();
    let brute = m.count_zeros(budget)? as i64 - q;
    let lhs = side(q, &a, &b, &c, &m.row_discriminant(), budget)?;
    let rhs = side(q, &d1, &d2, &d3, &m.down_discriminant(), budget)?;
    Ok(MasterSides { lhs, rhs, brute })
}

/// When `β^2 - 4αγ` is square-free and non-constant, both common-zero
/// counts must vanish; returns true exactly in that case. Returns false
/// when the hypothesis fails.
///
/// A nonzero constant discriminant is excluded: rows `(0,0,0), (0,0,1),
/// (0,0,-u0)` give `β^2 - 4αγ = 1` while the down polynomials share the root `u0`.
pub fn square_free_implies_no_common_zeros(m: &CoeffMatrix3) -> bool {
    let disc = m.row_discriminant();
    if disc.is_constant() || !disc.is_square_free().unwrap_or(false) {
        return false;
    }
    let (a, b, c) = m.row_polys();
    let (d1, d2, d3) = m.down_polys();
    let rows = common_zero_count(&a, &b, &c).expect("same field");
    let down = common_zero_count(&d1, &d2, &d3).expect("same field");
    rows == 0 && down == 0
}

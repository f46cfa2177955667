//! Dense univariate polynomials over a [`FiniteField`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField, Repr};

/// Coefficients are stored lowest degree first with trailing zeros stripped,
/// so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: FiniteField,
    coeffs: Vec<Repr>,
}

impl Poly {
    fn from_reprs(field: &FiniteField, mut coeffs: Vec<Repr>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Builds a polynomial from ascending coefficients.
    ///
    /// Panics if a coefficient belongs to another field; see [`Poly::try_new`].
    pub fn new(field: &FiniteField, coeffs: Vec<FieldElement>) -> Poly {
        Self::try_new(field, coeffs).expect("coefficient from a different field")
    }

    pub fn try_new(field: &FiniteField, coeffs: Vec<FieldElement>) -> Result<Poly> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Self::from_reprs(
            field,
            coeffs.iter().map(|c| c.repr).collect(),
        ))
    }

    /// Integer coefficients, constant term first.
    pub fn from_ascending(field: &FiniteField, coeffs: &[i64]) -> Poly {
        Self::from_reprs(field, coeffs.iter().map(|&c| field.r_from_i64(c)).collect())
    }

    /// Integer coefficients, leading term first: `[1, 14, 24, 14, 1]` is
    /// `x^4 + 14x^3 + 24x^2 + 14x + 1`.
    pub fn from_descending(field: &FiniteField, coeffs: &[i64]) -> Poly {
        Self::from_reprs(
            field,
            coeffs.iter().rev().map(|&c| field.r_from_i64(c)).collect(),
        )
    }

    /// Field-element coefficients, leading term first.
    pub fn from_descending_elems(field: &FiniteField, coeffs: &[FieldElement]) -> Poly {
        Self::new(field, coeffs.iter().rev().cloned().collect())
    }

    /// Parses the comma-separated textual form, constant term last.
    pub fn parse(field: &FiniteField, text: &str) -> Result<Poly> {
        let coeffs = text
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {t:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_descending(field, &coeffs))
    }

    pub fn zero(field: &FiniteField) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: &FieldElement) -> Poly {
        Self::from_reprs(c.field(), vec![c.repr])
    }

    /// The polynomial `x`.
    pub fn x(field: &FiniteField) -> Poly {
        Self::from_reprs(field, vec![Repr::ZERO, field.r_one()])
    }

    /// `c x^n`.
    pub fn monomial(c: &FieldElement, n: usize) -> Poly {
        let mut coeffs = vec![Repr::ZERO; n + 1];
        coeffs[n] = c.repr;
        Self::from_reprs(c.field(), coeffs)
    }

    /// `u x + v`.
    pub fn linear(u: &FieldElement, v: &FieldElement) -> Poly {
        Self::new(u.field(), vec![v.clone(), u.clone()])
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&self.field.r_one())
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().map(|&c| self.field.wrap(c))
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field
            .wrap(self.coeffs.get(i).copied().unwrap_or(Repr::ZERO))
    }

    /// Ascending coefficients.
    pub fn coefficients(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.coeffs.iter().map(|&c| self.field.wrap(c))
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(Repr::ZERO);
                let b = other.coeffs.get(i).copied().unwrap_or(Repr::ZERO);
                f.r_add(a, b)
            })
            .collect();
        Ok(Self::from_reprs(f, coeffs))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![Repr::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.r_add(out[i + j], f.r_mul(a, b));
            }
        }
        Ok(Self::from_reprs(f, out))
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        assert!(c.field() == &self.field, "scalar from a different field");
        let f = &self.field;
        Self::from_reprs(f, self.coeffs.iter().map(|&a| f.r_mul(a, c.repr)).collect())
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::constant(&self.field.one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.r_mul(c, f.r_from_i64(i as i64)))
            .collect();
        Self::from_reprs(f, coeffs)
    }

    #[inline]
    pub(crate) fn r_eval(&self, x: Repr) -> Repr {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Repr::ZERO, |acc, &c| f.r_add(f.r_mul(acc, x), c))
    }

    /// Panics if `x` belongs to another field.
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        assert!(
            x.field() == &self.field,
            "evaluation point from a different field"
        );
        self.field.wrap(self.r_eval(x.repr))
    }

    /// Euclidean division `self = quotient * divisor + remainder`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        let f = &self.field;
        let dlead = *divisor.coeffs.last().ok_or(Error::ZeroPolynomial)?;
        let dinv = f.r_inv(dlead).expect("leading coefficient is nonzero");
        let dn = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dn {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![Repr::ZERO; rem.len() - dn + 1];
        for top in (dn - 1..rem.len()).rev() {
            let c = f.r_mul(rem[top], dinv);
            if c.is_zero() {
                continue;
            }
            let shift = top + 1 - dn;
            quot[shift] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = f.r_sub(rem[shift + j], f.r_mul(c, d));
            }
        }
        rem.truncate(dn - 1);
        Ok((Self::from_reprs(f, quot), Self::from_reprs(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Scales to leading coefficient one; the zero polynomial is unchanged.
    pub fn make_monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.make_monic())
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::constant(&self.field.one()).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            base = (&base * &base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Poly) -> Result<Poly> {
        self.same_field(inner)?;
        let mut out = Poly::zero(&self.field);
        for c in self.coefficients().collect::<Vec<_>>().into_iter().rev() {
            out = &(&out * inner) + &Poly::constant(&c);
        }
        Ok(out)
    }

    /// `self(u x + v)`, expanded.
    pub fn affine_substitute(&self, u: &FieldElement, v: &FieldElement) -> Result<Poly> {
        if u.field() != &self.field || v.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if u.is_zero() {
            return Err(Error::ZeroScale);
        }
        self.compose(&Poly::linear(u, v))
    }

    /// Shifts a monic quartic by `x -> x - a_3/4`, killing the cubic term.
    /// Returns the depressed quartic and the shift `-a_3/4`.
    pub fn depress_quartic(&self) -> Result<(Poly, FieldElement)> {
        if self.degree() != Some(4) || !self.is_monic() {
            return Err(Error::NotMonicQuartic);
        }
        let f = &self.field;
        let shift = -(self.coeff(3) / f.elem(4));
        let depressed = self.affine_substitute(&f.one(), &shift)?;
        Ok((depressed, shift))
    }

    /// True iff `gcd(f, f')` is constant.
    pub fn is_square_free(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative())?.is_constant())
    }

    /// `Res(f, g) = lc(f)^deg g * prod_{f(r)=0} g(r)`, by Euclidean descent.
    /// Zero if either argument is zero.
    pub fn resultant(&self, other: &Poly) -> Result<FieldElement> {
        self.same_field(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(f.zero());
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut acc = f.one();
        loop {
            let m = a.degree().expect("nonzero") as u64;
            let n = b.degree().expect("nonzero") as u64;
            let lb = b.leading().expect("nonzero");
            if n == 0 {
                return Ok(acc * lb.pow(m));
            }
            if m == 0 {
                return Ok(acc * a.leading().expect("nonzero").pow(n));
            }
            let r = a.rem(&b)?;
            let Some(s) = r.degree() else {
                return Ok(f.zero());
            };
            if m * n % 2 == 1 {
                acc = -acc;
            }
            acc = acc * lb.pow(m - s as u64);
            a = b;
            b = r;
        }
    }

    /// `(-1)^{n(n-1)/2} Res(f, f') / lc(f)`, with `f'` taken at its formal
    /// degree `n - 1`. Nonzero iff `f` is square-free.
    pub fn discriminant(&self) -> Result<FieldElement> {
        let n = match self.degree() {
            Some(n) if n >= 2 => n,
            _ => return Err(Error::DegreeTooLow),
        };
        let lc = self.leading().expect("degree >= 2");
        let d = self.derivative();
        let Some(dd) = d.degree() else {
            return Ok(self.field.zero());
        };
        let formal = self.resultant(&d)? * lc.pow((n - 1 - dd) as u64);
        let signed = if (n * (n - 1) / 2) % 2 == 1 {
            -formal
        } else {
            formal
        };
        signed.checked_div(&lc)
    }

    /// Number of distinct roots in `F_q`, as `deg gcd(f, x^q - x)`.
    /// The zero polynomial vanishes everywhere and counts `q`.
    pub fn distinct_root_count(&self) -> u64 {
        if self.is_zero() {
            return self.field.q();
        }
        if self.is_constant() {
            return 0;
        }
        let f = self.make_monic();
        let x = Poly::x(&self.field);
        let frob = x.pow_mod(self.field.q(), &f).expect("nonzero modulus");
        let g = f.gcd(&(&frob - &x)).expect("same field");
        g.degree().unwrap_or(0) as u64
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self
            .coefficients()
            .enumerate()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
        {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let cs = if cs.contains('+') {
                format!("({cs})")
            } else {
                cs
            };
            match (i, c.is_one()) {
                (0, _) => write!(f, "{cs}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{cs}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{cs}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::from_reprs(f, self.coeffs.iter().map(|&c| f.r_neg(c)).collect())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs)
                    .expect("polynomials over different fields")
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

//! Finite fields `F_q`, `q = p^k` with `p > 3` and `k <= 3`, and their
//! quadratic character.
//!
//! A [`FiniteField`] is a cheap shared handle; a [`FieldElement`] carries its
//! field alongside canonical coordinates (a residue for `k = 1`, otherwise
//! the coefficients of a polynomial in `t` reduced modulo the field's
//! defining polynomial).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use crate::arith::{is_prime, jacobi, mul_mod, reduce_i64};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Canonical coordinates; slots at index `>= k` are always zero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Repr(pub(crate) [u64; 3]);

impl Repr {
    pub(crate) const ZERO: Repr = Repr([0; 3]);

    #[inline]
    pub(crate) fn is_zero(self) -> bool {
        self.0 == [0; 3]
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    p: u64,
    k: usize,
    q: u64,
    /// Monic defining polynomial, ascending coefficients; `modulus[k] == 1`.
    /// Unused (all zero) for prime fields.
    modulus: [u64; 4],
}

#[derive(Clone)]
pub struct FiniteField(Arc<Inner>);

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)?;
        if self.0.k > 1 {
            write!(f, " (mod {})", self.modulus_poly_string())?;
        }
        Ok(())
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

impl FiniteField {
    /// Builds `F_{p^k}`. For `k > 1` the defining polynomial is the first
    /// monic irreducible of degree `k` when the lower coefficients
    /// `(c_{k-1}, ..., c_0)` are enumerated lexicographically.
    pub fn new(p: u64, k: usize) -> Result<Self> {
        if !(1..=3).contains(&k) {
            return Err(Error::InvalidDegree(k));
        }
        if p == 2 || p == 3 {
            return Err(Error::CharTwoOrThree(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = (0..k)
            .try_fold(1u64, |acc, _| acc.checked_mul(p))
            .filter(|&q| q < 1 << 63)
            .ok_or(Error::Overflow { p, k })?;

        let prime = FiniteField(Arc::new(Inner {
            p,
            k: 1,
            q: p,
            modulus: [0; 4],
        }));
        if k == 1 {
            return Ok(prime);
        }
        let modulus = smallest_irreducible(&prime, k);
        Ok(FiniteField(Arc::new(Inner { p, k, q, modulus })))
    }

    /// Shorthand for the prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn k(&self) -> usize {
        self.0.k
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }

    /// Ascending coefficients of the defining polynomial, `None` for `k = 1`.
    pub fn modulus(&self) -> Option<Vec<u64>> {
        (self.0.k > 1).then(|| self.0.modulus[..=self.0.k].to_vec())
    }

    fn modulus_poly_string(&self) -> String {
        let m = &self.0.modulus[..=self.0.k];
        let mut terms = Vec::new();
        for (i, &c) in m.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            terms.push(match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}t^{i}"),
            });
        }
        terms.join(" + ")
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(Repr::ZERO)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(self.r_one())
    }

    /// Image of an integer in the prime subfield.
    pub fn elem(&self, n: i64) -> FieldElement {
        self.wrap(self.r_from_i64(n))
    }

    /// Element with the given coordinates `c_0 + c_1 t + ...`.
    pub fn from_coords(&self, coords: &[i64]) -> Result<FieldElement> {
        if coords.len() > self.0.k {
            return Err(Error::WrongDegree(format!(
                "{} coordinates for a degree-{} field",
                coords.len(),
                self.0.k
            )));
        }
        let mut r = Repr::ZERO;
        for (slot, &c) in r.0.iter_mut().zip(coords) {
            *slot = reduce_i64(c, self.0.p);
        }
        Ok(self.wrap(r))
    }

    /// The adjoined root `t` of the defining polynomial (`None` for prime fields).
    pub fn adjoined_root(&self) -> Option<FieldElement> {
        (self.0.k > 1).then(|| self.wrap(Repr([0, 1, 0])))
    }

    /// Element number `index` in the enumeration order (base-`p` digits as
    /// coordinates). Panics if `index >= q`.
    pub fn element(&self, index: u64) -> FieldElement {
        assert!(
            index < self.0.q,
            "element index {index} out of range for {self}"
        );
        self.wrap(self.r_from_index(index))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |i| self.element(i))
    }

    /// `σ(-1)`: `1` iff `q ≡ 1 (mod 4)`.
    pub fn legendre_minus_one(&self) -> i32 {
        self.r_sigma(self.r_neg(self.r_one()))
    }

    #[inline]
    pub(crate) fn wrap(&self, repr: Repr) -> FieldElement {
        FieldElement {
            field: self.clone(),
            repr,
        }
    }

    // Raw arithmetic on coordinates. No field checks happen at this level.

    #[inline]
    pub(crate) fn r_one(&self) -> Repr {
        Repr([1, 0, 0])
    }

    #[inline]
    pub(crate) fn r_from_i64(&self, n: i64) -> Repr {
        Repr([reduce_i64(n, self.0.p), 0, 0])
    }

    pub(crate) fn r_from_index(&self, mut index: u64) -> Repr {
        let p = self.0.p;
        let mut r = Repr::ZERO;
        for slot in r.0.iter_mut().take(self.0.k) {
            *slot = index % p;
            index /= p;
        }
        r
    }

    pub(crate) fn r_index(&self, r: Repr) -> u64 {
        r.0[..self.0.k]
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.0.p + c)
    }

    #[inline]
    pub(crate) fn r_add(&self, a: Repr, b: Repr) -> Repr {
        let p = self.0.p;
        let mut out = Repr::ZERO;
        for i in 0..self.0.k {
            let s = a.0[i] + b.0[i];
            out.0[i] = if s >= p { s - p } else { s };
        }
        out
    }

    #[inline]
    pub(crate) fn r_neg(&self, a: Repr) -> Repr {
        let p = self.0.p;
        let mut out = Repr::ZERO;
        for i in 0..self.0.k {
            out.0[i] = if a.0[i] == 0 { 0 } else { p - a.0[i] };
        }
        out
    }

    #[inline]
    pub(crate) fn r_sub(&self, a: Repr, b: Repr) -> Repr {
        self.r_add(a, self.r_neg(b))
    }

    #[inline]
    fn mulp(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        if p < 1 << 32 {
            a * b % p
        } else {
            mul_mod(a, b, p)
        }
    }

    #[inline]
    pub(crate) fn r_mul(&self, a: Repr, b: Repr) -> Repr {
        let k = self.0.k;
        if k == 1 {
            return Repr([self.mulp(a.0[0], b.0[0]), 0, 0]);
        }
        let p = self.0.p;
        let mut prod = [0u64; 5];
        for i in 0..k {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..k {
                let t = self.mulp(a.0[i], b.0[j]);
                let s = prod[i + j] + t;
                prod[i + j] = if s >= p { s - p } else { s };
            }
        }
        // x^k = -(m_0 + ... + m_{k-1} x^{k-1})
        let m = &self.0.modulus;
        for top in (k..2 * k - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for j in 0..k {
                let t = self.mulp(c, m[j]);
                let d = prod[top - k + j];
                prod[top - k + j] = if d >= t { d - t } else { d + p - t };
            }
        }
        let mut out = Repr::ZERO;
        out.0[..k].copy_from_slice(&prod[..k]);
        out
    }

    pub(crate) fn r_pow(&self, mut base: Repr, mut exp: u64) -> Repr {
        let mut acc = self.r_one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.r_mul(acc, base);
            }
            base = self.r_mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub(crate) fn r_inv(&self, a: Repr) -> Option<Repr> {
        (!a.is_zero()).then(|| self.r_pow(a, self.0.q - 2))
    }

    /// Quadratic character; Jacobi fast path on prime fields.
    #[inline]
    pub(crate) fn r_sigma(&self, a: Repr) -> i32 {
        if a.is_zero() {
            0
        } else if self.0.k == 1 {
            jacobi(a.0[0], self.0.p)
        } else {
            self.r_sigma_euler(a)
        }
    }

    pub(crate) fn r_sigma_euler(&self, a: Repr) -> i32 {
        if a.is_zero() {
            return 0;
        }
        let e = self.r_pow(a, (self.0.q - 1) / 2);
        if e == self.r_one() {
            1
        } else {
            debug_assert_eq!(e, self.r_neg(self.r_one()));
            -1
        }
    }
}

fn smallest_irreducible(prime: &FiniteField, k: usize) -> [u64; 4] {
    let p = prime.p();
    let count = p.pow(k as u32);
    for index in 0..count {
        let mut coeffs: Vec<FieldElement> = (0..k)
            .scan(index, |rest, _| {
                let c = *rest % p;
                *rest /= p;
                Some(prime.elem(c as i64))
            })
            .collect();
        coeffs.push(prime.one());
        let f = Poly::new(prime, coeffs);
        // Degree <= 3: irreducible iff rootless.
        if f.distinct_root_count() == 0 {
            let mut m = [0u64; 4];
            for (slot, c) in m.iter_mut().zip(f.coefficients()) {
                *slot = c.repr.0[0];
            }
            return m;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_{p}")
}

/// An element of a [`FiniteField`], always in canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FiniteField,
    pub(crate) repr: Repr,
}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.0.q.hash(state);
        self.repr.hash(state);
    }
}

impl FieldElement {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// Coordinates `c_0, ..., c_{k-1}`, each in `[0, p)`.
    pub fn coords(&self) -> &[u64] {
        &self.repr.0[..self.field.k()]
    }

    /// Position in the field's enumeration order.
    pub fn index(&self) -> u64 {
        self.field.r_index(self.repr)
    }

    /// The residue in `[0, p)`, if the element lies in the prime subfield.
    pub fn as_prime_residue(&self) -> Option<u64> {
        self.repr.0[1..]
            .iter()
            .all(|&c| c == 0)
            .then_some(self.repr.0[0])
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.repr == self.field.r_one()
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.r_add(self.repr, other.repr)))
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.r_sub(self.repr, other.repr)))
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.r_mul(self.repr, other.repr)))
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        let inv = other.inv()?;
        Ok(self.field.wrap(self.field.r_mul(self.repr, inv.repr)))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        self.field
            .r_inv(self.repr)
            .map(|r| self.field.wrap(r))
            .ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, exp: u64) -> FieldElement {
        self.field.wrap(self.field.r_pow(self.repr, exp))
    }

    pub fn square(&self) -> FieldElement {
        self.field.wrap(self.field.r_mul(self.repr, self.repr))
    }

    /// The quadratic character `σ`, with `σ(0) = 0`.
    pub fn sigma(&self) -> i32 {
        self.field.r_sigma(self.repr)
    }

    /// `σ` computed strictly by Euler's criterion `a^((q-1)/2)`.
    pub fn sigma_euler(&self) -> i32 {
        self.field.r_sigma_euler(self.repr)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coords();
        if c.len() == 1 || c[1..].iter().all(|&x| x == 0) {
            return write!(f, "{}", c[0]);
        }
        let mut terms = Vec::new();
        for (i, &ci) in c.iter().enumerate().rev() {
            if ci == 0 {
                continue;
            }
            terms.push(match (i, ci) {
                (0, ci) => ci.to_string(),
                (1, 1) => "t".into(),
                (1, ci) => format!("{ci}t"),
                (i, 1) => format!("t^{i}"),
                (i, ci) => format!("{ci}t^{i}"),
            });
        }
        write!(f, "{}", terms.join("+"))
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.wrap(self.field.r_neg(self.repr))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

// Operators panic on mixed fields; use the `checked_*` methods to get an error.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs)
                    .unwrap_or_else(|e| panic!("{}: {e}", stringify!($method)))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, k: usize) -> FiniteField {
        FiniteField::new(p, k).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FiniteField::new(2, 1), Err(Error::CharTwoOrThree(2)));
        assert_eq!(FiniteField::new(3, 2), Err(Error::CharTwoOrThree(3)));
        assert_eq!(FiniteField::new(9, 1), Err(Error::NotPrime(9)));
        assert_eq!(FiniteField::new(1, 1), Err(Error::NotPrime(1)));
        assert_eq!(FiniteField::new(7, 4), Err(Error::InvalidDegree(4)));
        assert_eq!(FiniteField::new(7, 0), Err(Error::InvalidDegree(0)));
        let big = 4_294_967_311; // prime just above 2^32
        assert_eq!(
            FiniteField::new(big, 2),
            Err(Error::Overflow { p: big, k: 2 })
        );
        assert!(FiniteField::new(2_147_483_647, 2).is_ok());
    }

    #[test]
    fn prime_field_basics() {
        let f7 = f(7, 1);
        assert_eq!(f7.q(), 7);
        assert_eq!(f7.modulus(), None);
        assert_eq!(f7.elem(3) + f7.elem(5), f7.elem(1));
        assert_eq!(f7.elem(3).inv().unwrap(), f7.elem(5));
        assert_eq!(f7.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(f7.elem(-1), f7.elem(6));
        assert_eq!(f7.elem(3).pow(6), f7.one());
    }

    #[test]
    fn f25_modulus_is_first_irreducible() {
        // Oracle: enumerate the 25 monic quadratics x^2 + c1 x + c0 in
        // (c1, c0) order and keep the first without roots in F_5.
        let p = 5u64;
        let mut want = None;
        'search: for c1 in 0..p {
            for c0 in 0..p {
                if (0..p).all(|x| (x * x + c1 * x + c0) % p != 0) {
                    want = Some(vec![c0, c1, 1]);
                    break 'search;
                }
            }
        }
        assert_eq!(want, Some(vec![2, 0, 1]));
        assert_eq!(f(5, 2).modulus(), want);
    }

    #[test]
    fn f25_multiplication_reduces_by_modulus() {
        let f25 = f(5, 2);
        let t = f25.adjoined_root().unwrap();
        // t^2 = -2 = 3
        assert_eq!(&t * &t, f25.elem(3));
        // (1 + 2t)(3 + t) = 3 + 7t + 2t^2 = 3 + 2t + 6 = 4 + 2t
        let a = f25.from_coords(&[1, 2]).unwrap();
        let b = f25.from_coords(&[3, 1]).unwrap();
        assert_eq!(a * b, f25.from_coords(&[4, 2]).unwrap());
    }

    #[test]
    fn cubic_extension_moduli_are_irreducible() {
        for p in [5u64, 7, 11, 13] {
            let fq = f(p, 3);
            let m = fq.modulus().unwrap();
            for x in 0..p {
                let v = (m[0] + m[1] * x + m[2] * x * x + x * x * x) % p;
                assert_ne!(v, 0, "root {x} of modulus over F_{p}");
            }
        }
    }

    #[test]
    fn field_axioms_in_extensions() {
        for fq in [f(5, 2), f(7, 2), f(5, 3)] {
            let elems: Vec<_> = fq.elements().collect();
            assert_eq!(elems.len() as u64, fq.q());
            for a in &elems {
                assert_eq!(fq.element(a.index()), *a);
                if !a.is_zero() {
                    assert!((a * &a.inv().unwrap()).is_one(), "{a:?}");
                }
            }
            for a in elems.iter().step_by(3) {
                for b in elems.iter().step_by(5) {
                    for c in elems.iter().step_by(7) {
                        assert_eq!(a * &(b + c), a * b + a * c);
                        assert_eq!((a * b) * c, a * (b * c));
                    }
                }
            }
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let a = f(5, 1).one();
        let b = f(7, 1).one();
        assert_eq!(a.checked_add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.checked_mul(&b), Err(Error::FieldMismatch));
        assert_eq!(a.checked_div(&f(5, 2).one()), Err(Error::FieldMismatch));
    }

    #[test]
    fn sigma_examples() {
        let f7 = f(7, 1);
        let f5 = f(5, 1);
        assert_eq!(f7.zero().sigma(), 0);
        assert_eq!(f7.elem(2).sigma(), 1);
        assert_eq!(f5.elem(2).sigma(), -1);
        assert_eq!(f5.legendre_minus_one(), 1);
        assert_eq!(f7.legendre_minus_one(), -1);
        assert_eq!(f(5, 2).legendre_minus_one(), 1);
        assert_eq!(f(7, 2).legendre_minus_one(), 1);
        assert_eq!(f(7, 3).legendre_minus_one(), -1);
    }

    #[test]
    fn fast_path_character_agrees_with_euler() {
        for p in (5..=1000u64).filter(|&p| is_prime(p)) {
            let fp = f(p, 1);
            for a in fp.elements() {
                assert_eq!(a.sigma(), a.sigma_euler(), "a = {a} mod {p}");
            }
        }
    }

    #[test]
    fn character_properties_exhaustive() {
        let mut fields: Vec<FiniteField> = (5..=113u64)
            .filter(|&p| is_prime(p))
            .map(|p| f(p, 1))
            .collect();
        fields.extend([f(5, 2), f(7, 2), f(11, 2)]);
        for fq in fields {
            assert!(fq.q() <= 121);
            let elems: Vec<_> = fq.elements().collect();
            let chars: Vec<i32> = elems.iter().map(|a| a.sigma()).collect();
            assert_eq!(chars.iter().sum::<i32>(), 0, "{fq}");
            for (a, sa) in elems.iter().zip(&chars).skip(1) {
                assert_eq!(a.square().sigma(), 1);
                for (b, sb) in elems.iter().zip(&chars).skip(1) {
                    assert_eq!((a * b).sigma(), sa * sb);
                }
            }
        }
    }

    #[test]
    fn display() {
        let f25 = f(5, 2);
        assert_eq!(f25.from_coords(&[4, 2]).unwrap().to_string(), "2t+4");
        assert_eq!(f25.elem(3).to_string(), "3");
        assert_eq!(format!("{f25:?}"), "F_25 (mod t^2 + 2)");
    }
}

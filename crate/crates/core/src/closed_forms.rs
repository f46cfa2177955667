//! Closed-form evaluations over prime fields: representations of `p` (or
//! `4p`) by binary quadratic forms, the cubic sums they evaluate, and three
//! worked quartic examples reduced to those cubics by descent.

use crate::arith::{is_prime, is_square, isqrt, legendre, mul_mod, pow_mod, reduce_i64};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::poly::Poly;
use crate::sums::char_sum;
use crate::transforms::{descend_depressed, descend_quartic, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadForm {
    /// `p = A^2 + d B^2`
    P,
    /// `4p = A^2 + d B^2`
    FourP,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadFormRep {
    pub a: i64,
    pub b: i64,
    pub d: u64,
    pub form: QuadForm,
}

impl QuadFormRep {
    /// The represented value, `p` or `4p`.
    pub fn value(&self) -> i64 {
        self.a * self.a + self.d as i64 * self.b * self.b
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p == 2 || p == 3 {
        Err(Error::CharTwoOrThree(p))
    } else if !is_prime(p) {
        Err(Error::NotPrime(p))
    } else {
        Ok(())
    }
}

/// Square root of `a` modulo an odd prime `p`; the smaller of the two roots.
pub fn tonelli_shanks(a: u64, p: u64) -> Result<u64> {
    let a = a % p;
    if a == 0 {
        return Ok(0);
    }
    if legendre(a as i64, p) != 1 {
        return Err(Error::NonResidue { a, p });
    }
    let s = (p - 1).trailing_zeros();
    let odd = (p - 1) >> s;
    let z = (2..p)
        .find(|&z| legendre(z as i64, p) == -1)
        .expect("p is an odd prime");

    let mut m = s;
    let mut c = pow_mod(z, odd, p);
    let mut t = pow_mod(a, odd, p);
    let mut r = pow_mod(a, odd.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Ok(r.min(p - r))
}

/// Euclidean descent on `(modulus, root)` until the remainder drops to `limit`.
fn descend(mut a: u64, mut b: u64, limit: u64) -> u64 {
    while b > limit {
        let r = a % b;
        a = b;
        b = r;
    }
    b
}

/// `p = A^2 + 3B^2` with `B > 0` and `A ≡ -1 (mod 3)`, for primes `p ≡ 1 (mod 3)`.
pub fn cornacchia(p: u64) -> Result<QuadFormRep> {
    check_prime(p)?;
    if p % 3 != 1 {
        return Err(Error::WrongResidueClass { p });
    }
    let root = tonelli_shanks(p - 3, p)?;
    let a = descend(p, root, isqrt(p));
    let rest = p - a * a;
    let b = rest.is_multiple_of(3)
        .then(|| is_square(rest / 3))
        .flatten()
        .expect("p = 1 mod 3 is always of the form A^2 + 3B^2");
    let mut a = a as i64;
    if a.rem_euclid(3) != 2 {
        a = -a;
    }
    Ok(QuadFormRep {
        a,
        b: b as i64,
        d: 3,
        form: QuadForm::P,
    })
}

/// `4p = A^2 + 19B^2` with `A, B > 0`, for primes with `(p/19) = 1`.
pub fn cornacchia_4p(p: u64) -> Result<QuadFormRep> {
    check_prime(p)?;
    if p == 19 || legendre(p as i64, 19) != 1 {
        return Err(Error::WrongResidueClass { p });
    }
    let mut root = tonelli_shanks(reduce_i64(-19, p), p)?;
    if root % 2 == 0 {
        root = p - root;
    }
    let a = descend(2 * p, root, isqrt(4 * p));
    let rest = 4 * p - a * a;
    let b = rest.is_multiple_of(19)
        .then(|| is_square(rest / 19))
        .flatten()
        .expect("(p/19) = 1 implies 4p = A^2 + 19B^2 (class number one)");
    Ok(QuadFormRep {
        a: a as i64,
        b: b as i64,
        d: 19,
        form: QuadForm::FourP,
    })
}

/// `Σ σ(x^3 + 1)` over `F_p`: `2A_3` when `p ≡ 1 (mod 3)`, else `0`.
pub fn jacobsthal_cubic(p: u64) -> Result<i64> {
    check_prime(p)?;
    if p % 3 == 2 {
        return Ok(0);
    }
    Ok(2 * cornacchia(p)?.a)
}

/// `x^3 - 2^3·19·λ^2 x + 2·19^2·λ^3`.
pub fn rpr_polynomial(field: &FiniteField, lambda: i64) -> Poly {
    let l = field.elem(lambda);
    let lin = -(field.elem(8 * 19) * l.square());
    let cst = field.elem(2 * 19 * 19) * l.pow(3);
    Poly::from_descending_elems(field, &[field.one(), field.zero(), lin, cst])
}

/// Sum of `σ` over [`rpr_polynomial`]: `(2λ/p)(A/19)A` when `(p/19) = 1`
/// (with `4p = A^2 + 19B^2`), else `0`.
pub fn rpr_cubic(p: u64, lambda: i64) -> Result<i64> {
    check_prime(p)?;
    if p == 19 {
        return Err(Error::PIs19);
    }
    if reduce_i64(lambda, p) == 0 {
        return Err(Error::LambdaZero);
    }
    if legendre(p as i64, 19) != 1 {
        return Ok(0);
    }
    let rep = cornacchia_4p(p)?;
    let two_lambda = reduce_i64(lambda, p) as i64 * 2;
    Ok(legendre(two_lambda, p) as i64 * legendre(rep.a, 19) as i64 * rep.a)
}

pub fn example_1_polynomial(field: &FiniteField) -> Poly {
    Poly::from_descending(field, &[1, 14, 24, 14, 1])
}

/// `Σ σ(x^4 + 14x^3 + 24x^2 + 14x + 1)` over `F_p`.
pub fn example_1(p: u64) -> Result<i64> {
    check_prime(p)?;
    if p % 3 == 2 {
        return Ok(-1);
    }
    Ok(-1 + legendre(2, p) as i64 * jacobsthal_cubic(p)?)
}

/// Evaluation of example 1 by descent, shift and rescale, with every
/// intermediate sum checked by enumeration.
pub fn example_1_steps(p: u64) -> Result<Vec<Step>> {
    check_prime(p)?;
    let field = FiniteField::prime(p)?;
    let e = |n| field.elem(n);
    let sum = |f: &Poly| char_sum(f).map(|s| s.value);
    let mut steps = Vec::new();

    let f = example_1_polynomial(&field);
    let s_f = sum(&f)?;
    let descent = descend_quartic(&e(14), &e(24), &e(14), &e(1))?;
    let g = &descent.target;
    steps.push(Step::structural(
        "descent cubic is x^3 + 24x^2 + 192x + 296",
        *g == Poly::from_descending(&field, &[1, 24, 192, 296]),
    ));
    let s_g = sum(g)?;
    steps.push(Step::sums("S(f) = -1 + S(g)", s_f, -1 + s_g));

    let shifted = g.affine_substitute(&e(1), &e(-8))?;
    let cube_minus = Poly::from_descending(&field, &[1, 0, 0, -216]);
    steps.push(Step::structural(
        "g(x - 8) = x^3 - 6^3",
        shifted == cube_minus,
    ));
    steps.push(Step::sums("S(g) = S(x^3 - 216)", s_g, sum(&shifted)?));

    let x3p1 = Poly::from_descending(&field, &[1, 0, 0, 1]);
    let scaled = cube_minus.affine_substitute(&e(-6), &e(0))?;
    steps.push(Step::structural(
        "(-6x)^3 - 216 = -216(x^3 + 1)",
        scaled == x3p1.scale(&e(-216)),
    ));
    let s_j = sum(&x3p1)?;
    steps.push(Step::sums(
        "S(x^3 - 216) = (-6/p) S(x^3 + 1)",
        sum(&cube_minus)?,
        legendre(-6, p) as i64 * s_j,
    ));
    steps.push(Step::sums(
        "S(x^3 + 1) = closed form",
        s_j,
        jacobsthal_cubic(p)?,
    ));
    steps.push(Step::sums("S(f) = closed form", s_f, example_1(p)?));
    Ok(steps)
}

pub fn example_2_polynomial(field: &FiniteField) -> Poly {
    Poly::from_descending(field, &[1, 8, 24, -44, 16])
}

/// `Σ σ(x^4 + 8x^3 + 24x^2 - 44x + 16)` over `F_p`.
pub fn example_2(p: u64) -> Result<i64> {
    check_prime(p)?;
    if p == 19 {
        return Ok(p as i64 - 1);
    }
    if legendre(p as i64, 19) != 1 {
        return Ok(-1);
    }
    let a = cornacchia_4p(p)?.a;
    Ok(-1 + legendre(a, 19) as i64 * a)
}

/// Shift to `x^4 - 76x + 152`, descend to the `λ = 2` member of the RPR
/// family, evaluate; each sum checked by enumeration.
pub fn example_2_steps(p: u64) -> Result<Vec<Step>> {
    check_prime(p)?;
    let field = FiniteField::prime(p)?;
    let e = |n| field.elem(n);
    let sum = |f: &Poly| char_sum(f).map(|s| s.value);
    let mut steps = Vec::new();

    let f = example_2_polynomial(&field);
    let s_f = sum(&f)?;
    let depressed = f.affine_substitute(&e(1), &e(-2))?;
    steps.push(Step::structural(
        "f(x - 2) = x^4 - 76x + 152",
        depressed == Poly::from_descending(&field, &[1, 0, 0, -76, 152]),
    ));
    steps.push(Step::sums("S(f) = S(f(x - 2))", s_f, sum(&depressed)?));
    if p == 19 {
        steps.push(Step::structural(
            "f(x - 2) = x^4 over F_19",
            depressed == Poly::from_descending(&field, &[1, 0, 0, 0, 0]),
        ));
        steps.push(Step::sums("S(f) = p - 1", s_f, p as i64 - 1));
    } else {
        let descent = descend_depressed(&e(0), &e(-76), &e(152))?;
        steps.push(Step::structural(
            "descent cubic is x^3 - 608x + 5776 = RPR cubic at λ = 2",
            descent.target == Poly::from_descending(&field, &[1, 0, -608, 5776])
                && descent.target == rpr_polynomial(&field, 2),
        ));
        let s_c = sum(&descent.target)?;
        steps.push(Step::sums("S(f) = -1 + S(cubic)", s_f, -1 + s_c));
        steps.push(Step::sums(
            "S(cubic) = RPR closed form",
            s_c,
            rpr_cubic(p, 2)?,
        ));
    }
    steps.push(Step::sums("S(f) = closed form", s_f, example_2(p)?));
    Ok(steps)
}

/// Shift by `x -> x - 1`, depressed descent, rescale `x -> -4x`, and the
/// resulting identity `S((x^2+1)(x^2+4x+1)) = -1 + (-1/p) S(x^3+x^2+x)`.
pub fn example_3_steps(p: u64) -> Result<Vec<Step>> {
    check_prime(p)?;
    let field = FiniteField::prime(p)?;
    let e = |n| field.elem(n);
    let sum = |f: &Poly| char_sum(f).map(|s| s.value);
    let mut steps = Vec::new();

    let f = Poly::from_descending(&field, &[1, 0, 1]) * Poly::from_descending(&field, &[1, 4, 1]);
    let x = Poly::x(&field);
    let x1 = &x + &Poly::constant(&e(1));
    steps.push(Step::structural(
        "f = (x + 1)^4 - 4x^2",
        f == x1.pow(4) - x.pow(2).scale(&e(4)),
    ));
    let shifted = f.affine_substitute(&e(1), &e(-1))?;
    let xm1 = &x - &Poly::constant(&e(1));
    steps.push(Step::structural(
        "f(x - 1) = x^4 - 4(x - 1)^2",
        shifted == x.pow(4) - xm1.pow(2).scale(&e(4)),
    ));
    let s_f = sum(&f)?;
    steps.push(Step::sums("S(f) = S(f(x - 1))", s_f, sum(&shifted)?));

    let descent = descend_depressed(&e(-4), &e(8), &e(-4))?;
    steps.push(Step::structural(
        "descent cubic is x^3 - 4x^2 + 16x",
        descent.target == Poly::from_descending(&field, &[1, -4, 16, 0]),
    ));
    let s_c = sum(&descent.target)?;
    steps.push(Step::sums(
        "S(f(x - 1)) = -1 + S(cubic)",
        sum(&shifted)?,
        -1 + s_c,
    ));

    let cubic = Poly::from_descending(&field, &[1, 1, 1, 0]);
    let rescaled = descent.target.affine_substitute(&e(-4), &e(0))?;
    steps.push(Step::structural(
        "rescaled cubic = -64(x^3 + x^2 + x)",
        rescaled == cubic.scale(&e(-64)),
    ));
    let s_k = sum(&cubic)?;
    let chi = field.legendre_minus_one() as i64;
    steps.push(Step::sums(
        "S(cubic) = (-1/p) S(x^3 + x^2 + x)",
        s_c,
        chi * s_k,
    ));
    steps.push(Step::sums("Zhang identity", s_f, -1 + chi * s_k));
    Ok(steps)
}

pub fn example_3(p: u64) -> Result<bool> {
    Ok(example_3_steps(p)?.iter().all(|s| s.holds))
}

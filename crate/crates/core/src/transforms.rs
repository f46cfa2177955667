//! Transformation and descent formulas for character sums, each as a map
//! from parameters to a source polynomial, a target polynomial, and the
//! affine relation between their sums.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField, Repr};
use crate::poly::Poly;
use crate::sums::{char_sum_with_budget, check_budget, DEFAULT_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    Jacobsthal,
    LeprevostMorain,
    Biquadratic,
    Product,
    GeneralDescent,
    DepressedDescent,
    Symmetric,
    CubicCubic,
    PiIdentity,
    RemarkPipeline,
    Nagao,
    Zhang,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::Jacobsthal,
        Identity::LeprevostMorain,
        Identity::Biquadratic,
        Identity::Product,
        Identity::GeneralDescent,
        Identity::DepressedDescent,
        Identity::Symmetric,
        Identity::CubicCubic,
        Identity::PiIdentity,
        Identity::RemarkPipeline,
        Identity::Nagao,
        Identity::Zhang,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Jacobsthal => "jacobsthal",
            Identity::LeprevostMorain => "leprevost-morain",
            Identity::Biquadratic => "biquadratic",
            Identity::Product => "product",
            Identity::GeneralDescent => "general-descent",
            Identity::DepressedDescent => "depressed-descent",
            Identity::Symmetric => "symmetric",
            Identity::CubicCubic => "cubic-cubic",
            Identity::PiIdentity => "pi-identity",
            Identity::RemarkPipeline => "remark-pipeline",
            Identity::Nagao => "nagao",
            Identity::Zhang => "zhang",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

/// The claim `S(source) = additive + factor * S(target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformResult {
    pub identity: Identity,
    pub source: Poly,
    pub target: Poly,
    pub additive: i64,
    pub factor: i64,
}

/// Both sides of a claimed identity, evaluated by brute force.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Check {
    pub lhs: i64,
    pub rhs: i64,
}

impl Check {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl TransformResult {
    /// `S(lhs) = S(rhs)`.
    pub fn equality(identity: Identity, lhs: Poly, rhs: Poly) -> Self {
        TransformResult {
            identity,
            source: lhs,
            target: rhs,
            additive: 0,
            factor: 1,
        }
    }

    pub fn check(&self) -> Result<Check> {
        self.check_with_budget(DEFAULT_BUDGET)
    }

    pub fn check_with_budget(&self, budget: u64) -> Result<Check> {
        let lhs = char_sum_with_budget(&self.source, budget)?.value;
        let target = char_sum_with_budget(&self.target, budget)?.value;
        Ok(Check {
            lhs,
            rhs: self.additive + self.factor * target,
        })
    }
}

/// One link of a derivation chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub label: &'static str,
    pub detail: String,
    pub holds: bool,
}

impl Step {
    pub(crate) fn sums(label: &'static str, lhs: i64, rhs: i64) -> Step {
        Step {
            label,
            detail: format!("{lhs} = {rhs}"),
            holds: lhs == rhs,
        }
    }

    pub(crate) fn structural(label: &'static str, holds: bool) -> Step {
        Step {
            label,
            detail: String::new(),
            holds,
        }
    }
}

pub(crate) fn common_field(elems: &[&FieldElement]) -> Result<FiniteField> {
    let field = elems[0].field();
    if elems.iter().any(|e| e.field() != field) {
        return Err(Error::FieldMismatch);
    }
    Ok(field.clone())
}

fn desc(field: &FiniteField, coeffs: &[FieldElement]) -> Poly {
    Poly::from_descending_elems(field, coeffs)
}

/// `x (x^2 + bx + c)` and `(x + b)(x^2 - 4c)`, whose sums agree.
pub fn jacobsthal_pair(b: &FieldElement, c: &FieldElement) -> Result<(Poly, Poly)> {
    let field = common_field(&[b, c])?;
    let (zero, one, four) = (field.zero(), field.one(), field.elem(4));
    let lhs = desc(&field, &[one.clone(), b.clone(), c.clone(), zero.clone()]);
    let rhs = desc(&field, &[one.clone(), b.clone()]) * desc(&field, &[one, zero, -(four * c)]);
    Ok((lhs, rhs))
}

/// `x^5 + a x^3 + x` against `x^3 + 4x^2 + (a + 2)x`, with factor `1 + σ(-1)`.
pub fn leprevost_morain(a: &FieldElement) -> TransformResult {
    let field = a.field();
    let (zero, one) = (field.zero(), field.one());
    let source = desc(
        field,
        &[
            one.clone(),
            zero.clone(),
            a.clone(),
            zero.clone(),
            one.clone(),
            zero.clone(),
        ],
    );
    let target = desc(field, &[one, field.elem(4), a + &field.elem(2), zero]);
    TransformResult {
        identity: Identity::LeprevostMorain,
        source,
        target,
        additive: 0,
        factor: 1 + field.legendre_minus_one() as i64,
    }
}

/// `x^4 + bx^2 + c` down to `x^3 + bx^2 + cx`, valid when `b^2 != 4c`.
pub fn descend_biquadratic(b: &FieldElement, c: &FieldElement) -> Result<TransformResult> {
    let field = common_field(&[b, c])?;
    if b.square() == field.elem(4) * c {
        return Err(Error::DegenerateDiscriminant);
    }
    let (zero, one) = (field.zero(), field.one());
    Ok(TransformResult {
        identity: Identity::Biquadratic,
        source: desc(
            &field,
            &[
                one.clone(),
                zero.clone(),
                b.clone(),
                zero.clone(),
                c.clone(),
            ],
        ),
        target: desc(&field, &[one, b.clone(), c.clone(), zero]),
        additive: -1,
        factor: 1,
    })
}

/// `Δ_1 = b_1^2 - 4c_1`, `Δ_2 = b_2^2 - 4c_2`, `B = 4(c_1 + c_2) - 2 b_1 b_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductParams {
    pub delta1: FieldElement,
    pub delta2: FieldElement,
    pub big_b: FieldElement,
}

impl ProductParams {
    pub fn new(b1: &FieldElement, c1: &FieldElement, b2: &FieldElement, c2: &FieldElement) -> Self {
        let f = b1.field();
        let four = f.elem(4);
        ProductParams {
            delta1: b1.square() - &four * c1,
            delta2: b2.square() - &four * c2,
            big_b: &four * &(c1 + c2) - f.elem(2) * b1 * b2,
        }
    }

    /// `Δ_1 ≠ 0`, `Δ_2 ≠ 0` and `B^2 ≠ 4 Δ_1 Δ_2`.
    pub fn square_free_criterion(&self) -> bool {
        let four = self.delta1.field().elem(4);
        !self.delta1.is_zero()
            && !self.delta2.is_zero()
            && self.big_b.square() != four * &self.delta1 * &self.delta2
    }
}

/// `(x^2 + b_1 x + c_1)(x^2 + b_2 x + c_2)`.
pub fn product_quartic(
    b1: &FieldElement,
    c1: &FieldElement,
    b2: &FieldElement,
    c2: &FieldElement,
) -> Result<Poly> {
    let field = common_field(&[b1, c1, b2, c2])?;
    let one = field.one();
    Ok(desc(&field, &[one.clone(), b1.clone(), c1.clone()])
        * desc(&field, &[one, b2.clone(), c2.clone()]))
}

/// Product of two monic quadratics down to `x^3 + B x^2 + Δ_1 Δ_2 x`.
pub fn descend_product(
    b1: &FieldElement,
    c1: &FieldElement,
    b2: &FieldElement,
    c2: &FieldElement,
) -> Result<TransformResult> {
    let source = product_quartic(b1, c1, b2, c2)?;
    if !source.is_square_free()? {
        return Err(Error::NotSquareFree);
    }
    let field = source.field().clone();
    let params = ProductParams::new(b1, c1, b2, c2);
    let target = desc(
        &field,
        &[
            field.one(),
            params.big_b.clone(),
            &params.delta1 * &params.delta2,
            field.zero(),
        ],
    );
    Ok(TransformResult {
        identity: Identity::Product,
        source,
        target,
        additive: -1,
        factor: 1,
    })
}

/// The cubic `x^3 + a_2 x^2 + (a_1 a_3 - 4a_0) x + a_0(a_3^2 - 4a_2) + a_1^2`.
pub fn descent_cubic(
    a3: &FieldElement,
    a2: &FieldElement,
    a1: &FieldElement,
    a0: &FieldElement,
) -> Poly {
    let field = a3.field();
    let four = field.elem(4);
    desc(
        field,
        &[
            field.one(),
            a2.clone(),
            a1 * a3 - &four * a0,
            a0 * &(a3.square() - &four * a2) + a1.square(),
        ],
    )
}

/// Square-free monic quartic `x^4 + a_3 x^3 + a_2 x^2 + a_1 x + a_0` down to
/// [`descent_cubic`], with additive constant `-1`.
pub fn descend_quartic(
    a3: &FieldElement,
    a2: &FieldElement,
    a1: &FieldElement,
    a0: &FieldElement,
) -> Result<TransformResult> {
    let field = common_field(&[a3, a2, a1, a0])?;
    let source = desc(
        &field,
        &[field.one(), a3.clone(), a2.clone(), a1.clone(), a0.clone()],
    );
    if !source.is_square_free()? {
        return Err(Error::NotSquareFree);
    }
    Ok(TransformResult {
        identity: Identity::GeneralDescent,
        source,
        target: descent_cubic(a3, a2, a1, a0),
        additive: -1,
        factor: 1,
    })
}

/// `x^4 + ax^2 + bx + c` down to `x^3 + ax^2 - 4cx + b^2 - 4ac`.
pub fn descend_depressed(
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
) -> Result<TransformResult> {
    let field = common_field(&[a, b, c])?;
    let zero = field.zero();
    let source = desc(
        &field,
        &[field.one(), zero, a.clone(), b.clone(), c.clone()],
    );
    if !source.is_square_free()? {
        return Err(Error::NotSquareFree);
    }
    let four = field.elem(4);
    let target = desc(
        &field,
        &[
            field.one(),
            a.clone(),
            -(&four * c),
            b.square() - &four * &(a * c),
        ],
    );
    Ok(TransformResult {
        identity: Identity::DepressedDescent,
        source,
        target,
        additive: -1,
        factor: 1,
    })
}

/// General descent routed through the depressed case: depress the quartic,
/// descend, then substitute `x -> x + a_3^2/8` in the cubic.
pub fn descend_quartic_via_depressed(
    a3: &FieldElement,
    a2: &FieldElement,
    a1: &FieldElement,
    a0: &FieldElement,
) -> Result<TransformResult> {
    let field = common_field(&[a3, a2, a1, a0])?;
    let source = desc(
        &field,
        &[field.one(), a3.clone(), a2.clone(), a1.clone(), a0.clone()],
    );
    let (depressed, _) = source.depress_quartic()?;
    let dep = descend_depressed(
        &depressed.coeff(2),
        &depressed.coeff(1),
        &depressed.coeff(0),
    )?;
    let shift = a3.square() / field.elem(8);
    let target = dep.target.affine_substitute(&field.one(), &shift)?;
    Ok(TransformResult {
        identity: Identity::GeneralDescent,
        source,
        target,
        additive: -1,
        factor: 1,
    })
}

/// `(x^2 + a)^2 - 4x(bx + c)` and the same with `a`, `b` swapped; needs
/// `(a, c) ≠ (0, 0)` and `(b, c) ≠ (0, 0)`.
pub fn symmetric_quartic_pair(
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
) -> Result<(Poly, Poly)> {
    let field = common_field(&[a, b, c])?;
    if c.is_zero() && (a.is_zero() || b.is_zero()) {
        return Err(Error::DegenerateParameters);
    }
    let side = |a: &FieldElement, b: &FieldElement| {
        let two = field.elem(2);
        let four = field.elem(4);
        desc(
            &field,
            &[
                field.one(),
                field.zero(),
                &two * a - &four * b,
                -(&four * c),
                a.square(),
            ],
        )
    };
    Ok((side(a, b), side(b, a)))
}

/// `x((x + a)^2 - 4bx)` and `x((x + b)^2 - 4ax)` for nonzero `a`, `b`.
pub fn cubic_cubic_pair(a: &FieldElement, b: &FieldElement) -> Result<(Poly, Poly)> {
    let field = common_field(&[a, b])?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let side = |a: &FieldElement, b: &FieldElement| {
        let two = field.elem(2);
        let four = field.elem(4);
        desc(
            &field,
            &[field.one(), &two * a - &four * b, a.square(), field.zero()],
        )
    };
    Ok((side(a, b), side(b, a)))
}

/// `Π = (c_1 - c_2)^2 - b_1 b_2 (c_1 + c_2) + b_1^2 c_2 + b_2^2 c_1`, and
/// whether both `16Π = B^2 - 4Δ_1Δ_2` and `disc(f) = Δ_1 Δ_2 Π^2` hold.
pub fn product_discriminant_identity(
    b1: &FieldElement,
    c1: &FieldElement,
    b2: &FieldElement,
    c2: &FieldElement,
) -> Result<(FieldElement, bool)> {
    let f = product_quartic(b1, c1, b2, c2)?;
    let field = f.field();
    let pi = (c1 - c2).square() - b1 * b2 * (c1 + c2) + b1.square() * c2 + b2.square() * c1;
    let params = ProductParams::new(b1, c1, b2, c2);
    let d12 = &params.delta1 * &params.delta2;
    let sixteen_pi = field.elem(16) * &pi == params.big_b.square() - field.elem(4) * &d12;
    let disc = f.discriminant()? == d12 * pi.square();
    Ok((pi, sixteen_pi && disc))
}

/// Derives the product descent from the depressed descent and the
/// Jacobsthal pair, checking every intermediate identity by brute force.
pub fn remark_pipeline_steps(
    b1: &FieldElement,
    c1: &FieldElement,
    b2: &FieldElement,
    c2: &FieldElement,
) -> Result<Vec<Step>> {
    let f = product_quartic(b1, c1, b2, c2)?;
    if !f.is_square_free()? {
        return Err(Error::NotSquareFree);
    }
    let field = f.field().clone();
    let (one, two, four) = (field.one(), field.elem(2), field.elem(4));
    let sum = |p: &Poly| char_sum_with_budget(p, DEFAULT_BUDGET).map(|s| s.value);
    let mut steps = Vec::new();

    // shift x -> x + e with e = -(b1 + b2)/4
    let e = -((b1 + b2) / &four);
    let shifted = f.affine_substitute(&one, &e)?;
    let b1s = b1 + &(&two * &e);
    let b2s = b2 + &(&two * &e);
    let c1s = e.square() + b1 * &e + c1.clone();
    let c2s = e.square() + b2 * &e + c2.clone();
    steps.push(Step::structural(
        "shifted quartic factors with shifted parameters",
        shifted == product_quartic(&b1s, &c1s, &b2s, &c2s)?,
    ));
    let before = ProductParams::new(b1, c1, b2, c2);
    let after = ProductParams::new(&b1s, &c1s, &b2s, &c2s);
    steps.push(Step::structural(
        "Δ1, Δ2, B invariant under the shift",
        before == after,
    ));
    steps.push(Step::structural(
        "shift depresses the quartic",
        shifted.coeff(3).is_zero() && b1s == -&b2s,
    ));
    let s_f = sum(&f)?;
    steps.push(Step::sums("S(f) = S(f*)", s_f, sum(&shifted)?));

    // depressed descent on f* = (x^2 - bx + c1)(x^2 + bx + c2)
    let b = b2s.clone();
    let dep = descend_depressed(&shifted.coeff(2), &shifted.coeff(1), &shifted.coeff(0))?;
    let csum = &c1s + &c2s;
    let cprod = &c1s * &c2s;
    let g_expected = desc(
        &field,
        &[
            one.clone(),
            &csum - &b.square(),
            -(&four * &cprod),
            b.square() * csum.square() - &four * &cprod * &csum,
        ],
    );
    steps.push(Step::structural(
        "depressed descent gives the expected cubic",
        dep.target == g_expected,
    ));
    let s_g = sum(&dep.target)?;
    steps.push(Step::sums("S(f*) = -1 + S(g)", sum(&shifted)?, -1 + s_g));

    // g = (x + c1 + c2)(x^2 - b^2 x + b^2(c1 + c2) - 4c1c2)
    let factored = desc(&field, &[one.clone(), csum.clone()])
        * desc(
            &field,
            &[
                one.clone(),
                -b.square(),
                b.square() * &csum - &four * &cprod,
            ],
        );
    steps.push(Step::structural("g factors", dep.target == factored));

    // x -> x + b^2/2 gives (x + B/4)(x^2 - Δ1Δ2/4)
    let d12 = &after.delta1 * &after.delta2;
    let centred = dep.target.affine_substitute(&one, &(b.square() / &two))?;
    let centred_expected = desc(&field, &[one.clone(), &after.big_b / &four])
        * desc(&field, &[one.clone(), field.zero(), -(&d12 / &four)]);
    steps.push(Step::structural(
        "shift by b^2/2 centres the quadratic factor",
        centred == centred_expected,
    ));
    steps.push(Step::sums(
        "S(g) = S((x + B/4)(x^2 - Δ1Δ2/4))",
        s_g,
        sum(&centred)?,
    ));

    // x -> x/4, clearing the square factor 64
    let rescaled = centred
        .affine_substitute(&(&one / &four), &field.zero())?
        .scale(&field.elem(64));
    let (jac_lhs, jac_rhs) = jacobsthal_pair(&after.big_b, &d12)?;
    steps.push(Step::structural(
        "rescaling gives (x + B)(x^2 - 4Δ1Δ2)",
        rescaled == jac_rhs,
    ));
    steps.push(Step::sums(
        "S(g) = S((x + B)(x^2 - 4Δ1Δ2))",
        s_g,
        sum(&jac_rhs)?,
    ));

    // Jacobsthal back to x(x^2 + Bx + Δ1Δ2)
    let s_jac = sum(&jac_lhs)?;
    steps.push(Step::sums("Jacobsthal pair", sum(&jac_rhs)?, s_jac));
    let product = descend_product(b1, c1, b2, c2)?;
    steps.push(Step::structural(
        "chain ends at the product-descent cubic",
        product.target == jac_lhs,
    ));
    steps.push(Step::sums(
        "S(f) = -1 + S(x(x^2 + Bx + Δ1Δ2))",
        s_f,
        -1 + s_jac,
    ));
    Ok(steps)
}

pub fn remark_pipeline(
    b1: &FieldElement,
    c1: &FieldElement,
    b2: &FieldElement,
    c2: &FieldElement,
) -> Result<bool> {
    Ok(remark_pipeline_steps(b1, c1, b2, c2)?
        .iter()
        .all(|s| s.holds))
}

/// Applies the birational map from `Y^2 = g(X)` (the descent cubic) to
/// `y^2 = f(x)` at every cubic point with `4(X + a_2) ≠ a_3^2`.
/// Returns `(points that land on the quartic, points attempted)`.
pub fn nagao_map_check(
    a3: &FieldElement,
    a2: &FieldElement,
    a1: &FieldElement,
    a0: &FieldElement,
) -> Result<(u64, u64)> {
    let t = descend_quartic(a3, a2, a1, a0)?;
    let field = t.source.field().clone();
    let q = field.q();
    check_budget(q, q, DEFAULT_BUDGET)?;

    let mut roots: HashMap<Repr, Vec<FieldElement>> = HashMap::new();
    for y in field.elements() {
        roots.entry(y.square().repr).or_default().push(y);
    }
    let (two, four) = (field.elem(2), field.elem(4));
    let (mut mapped, mut total) = (0, 0);
    for big_x in field.elements() {
        let den = &four * &(&big_x + a2) - a3.square();
        if den.is_zero() {
            continue;
        }
        let gx = t.target.eval(&big_x);
        for big_y in roots.get(&gx.repr).map(Vec::as_slice).unwrap_or(&[]) {
            total += 1;
            let x = (&two * &(big_y - a1) - a3 * &big_x) / &den;
            let y = (&two * &x.square() + a3 * &x - big_x.clone()) / &two;
            if y.square() == t.source.eval(&x) {
                mapped += 1;
            }
        }
    }
    Ok((mapped, total))
}

/// `S((x^2+1)(x^2+4x+1)) = -1 + σ(-1) S(x^3+x^2+x)`.
pub fn zhang_transform(field: &FiniteField) -> TransformResult {
    TransformResult {
        identity: Identity::Zhang,
        source: Poly::from_descending(field, &[1, 4, 2, 4, 1]),
        target: Poly::from_descending(field, &[1, 1, 1, 0]),
        additive: -1,
        factor: field.legendre_minus_one() as i64,
    }
}

pub fn zhang_identity(field: &FiniteField) -> Result<bool> {
    Ok(zhang_transform(field).check()?.holds())
}

/// `g(x^2)`, `g(x)` and `x g(x)`: the sum over the first splits as the sum
/// of the other two.
pub fn descent_principle_split(g: &Poly) -> (Poly, Poly, Poly) {
    let x = Poly::x(g.field());
    let squared = g.compose(&(&x * &x)).expect("same field");
    (squared, g.clone(), &x * g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FiniteField {
        FiniteField::prime(p).unwrap()
    }

    fn sum(p: &Poly) -> i64 {
        crate::sums::char_sum(p).unwrap().value
    }

    #[test]
    fn identity_names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert!("master".parse::<Identity>().is_err());
    }

    #[test]
    fn jacobsthal_examples() {
        let f5 = fp(5);
        let (l, r) = jacobsthal_pair(&f5.zero(), &f5.one()).unwrap();
        assert_eq!((sum(&l), sum(&r)), (-2, -2));
        let (l, r) = jacobsthal_pair(&f5.zero(), &f5.zero()).unwrap();
        assert_eq!(l, r);
        let f101 = fp(101);
        for (b, c) in [(3, 17), (50, 1), (99, 0), (0, 77)] {
            let (l, r) = jacobsthal_pair(&f101.elem(b), &f101.elem(c)).unwrap();
            assert_eq!(sum(&l), sum(&r));
        }
        assert_eq!(
            jacobsthal_pair(&f5.one(), &f101.one()),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn leprevost_morain_examples() {
        let f5 = fp(5);
        let t = leprevost_morain(&f5.zero());
        assert_eq!(t.factor, 2);
        assert_eq!((sum(&t.source), sum(&t.target)), (0, 0));
        let f7 = fp(7);
        for a in f7.elements() {
            let t = leprevost_morain(&a);
            assert_eq!(t.factor, 0);
            assert_eq!(sum(&t.source), 0);
        }
        assert!(leprevost_morain(&fp(13).elem(2)).check().unwrap().holds());
    }

    #[test]
    fn biquadratic_examples() {
        let f5 = fp(5);
        let t = descend_biquadratic(&f5.zero(), &f5.elem(-1)).unwrap();
        assert_eq!((sum(&t.source), sum(&t.target)), (1, 2));
        assert!(descend_biquadratic(&f5.zero(), &f5.elem(4))
            .unwrap()
            .check()
            .unwrap()
            .holds());
        assert_eq!(
            descend_biquadratic(&f5.elem(2), &f5.one()),
            Err(Error::DegenerateDiscriminant)
        );
    }

    #[test]
    fn product_examples() {
        let f13 = fp(13);
        let e = |n| f13.elem(n);
        let t = descend_product(&e(0), &e(1), &e(4), &e(1)).unwrap();
        assert_eq!(t.source, Poly::from_descending(&f13, &[1, 4, 2, 4, 1]));
        assert!(t.check().unwrap().holds());
        assert_eq!(
            descend_product(&e(0), &e(1), &e(0), &e(1)),
            Err(Error::NotSquareFree)
        );
        let f101 = fp(101);
        let e = |n| f101.elem(n);
        assert!(descend_product(&e(3), &e(7), &e(-5), &e(12))
            .unwrap()
            .check()
            .unwrap()
            .holds());
    }

    #[test]
    fn quartic_descent_examples() {
        let f5 = fp(5);
        let e = |n| f5.elem(n);
        let t = descend_quartic(&e(0), &e(0), &e(0), &e(1)).unwrap();
        assert_eq!(t.target, Poly::from_descending(&f5, &[1, 0, -4, 0]));
        assert_eq!((sum(&t.source), sum(&t.target)), (-3, -2));

        let f7 = fp(7);
        let e = |n| f7.elem(n);
        assert!(descend_quartic(&e(14), &e(24), &e(14), &e(1))
            .unwrap()
            .check()
            .unwrap()
            .holds());

        let f101 = fp(101);
        let e = |n| f101.elem(n);
        let (a, b, c) = (7, -3, 11);
        let t = descend_quartic(&e(0), &e(a), &e(b), &e(c)).unwrap();
        assert_eq!(
            t.target,
            Poly::from_descending(&f101, &[1, a, -4 * c, b * b - 4 * a * c])
        );
        assert_eq!(
            descend_quartic(&e(0), &e(-2), &e(0), &e(1)),
            Err(Error::NotSquareFree)
        );
    }

    #[test]
    fn depressed_examples() {
        for p in [5u64, 7, 11, 13, 23, 101] {
            let field = fp(p);
            let e = |n| field.elem(n);
            if p != 19 {
                let t = descend_depressed(&e(0), &e(-76), &e(152)).unwrap();
                assert_eq!(t.target, Poly::from_descending(&field, &[1, 0, -608, 5776]));
            }
            let t = descend_depressed(&e(0), &e(0), &e(1)).unwrap();
            assert_eq!(t.target, Poly::from_descending(&field, &[1, 0, -4, 0]));
            let t = descend_depressed(&e(-4), &e(8), &e(-4)).unwrap();
            assert_eq!(t.target, Poly::from_descending(&field, &[1, -4, 16, 0]));
            assert!(t.check().unwrap().holds());
        }
        let f19 = fp(19);
        let e = |n| f19.elem(n);
        assert_eq!(
            descend_depressed(&e(0), &e(-76), &e(152)),
            Err(Error::NotSquareFree)
        );
    }

    #[test]
    fn depressed_route_reproduces_general_cubic() {
        let f101 = fp(101);
        for (a3, a2, a1, a0) in [
            (14, 24, 14, 1),
            (8, 24, -44, 16),
            (3, -7, 5, 2),
            (1, 0, 0, 9),
        ] {
            let e = |n| f101.elem(n);
            let direct = descend_quartic(&e(a3), &e(a2), &e(a1), &e(a0)).unwrap();
            let routed = descend_quartic_via_depressed(&e(a3), &e(a2), &e(a1), &e(a0)).unwrap();
            assert_eq!(direct.target, routed.target);
        }
    }

    #[test]
    fn symmetric_examples() {
        let f11 = fp(11);
        let e = |n| f11.elem(n);
        let (l, r) = symmetric_quartic_pair(&e(4), &e(4), &e(2)).unwrap();
        assert_eq!(l, r);
        let (l, r) = symmetric_quartic_pair(&e(1), &e(2), &e(3)).unwrap();
        assert_eq!(l, Poly::from_descending(&f11, &[1, 0, 2 - 8, -12, 1]));
        assert_eq!(sum(&l), sum(&r));
        let f7 = fp(7);
        let e = |n| f7.elem(n);
        let (l, r) = symmetric_quartic_pair(&e(1), &e(2), &e(0)).unwrap();
        assert_eq!(sum(&l), sum(&r));
        assert_eq!(
            symmetric_quartic_pair(&e(0), &e(2), &e(0)),
            Err(Error::DegenerateParameters)
        );
        assert_eq!(
            symmetric_quartic_pair(&e(1), &e(0), &e(0)),
            Err(Error::DegenerateParameters)
        );
        assert!(symmetric_quartic_pair(&e(0), &e(0), &e(1)).is_ok());
    }

    #[test]
    fn cubic_cubic_examples() {
        let f7 = fp(7);
        let (l, r) = cubic_cubic_pair(&f7.elem(3), &f7.elem(3)).unwrap();
        assert_eq!(l, r);
        let (l, r) = cubic_cubic_pair(&f7.elem(1), &f7.elem(2)).unwrap();
        assert_eq!(sum(&l), sum(&r));
        let f13 = fp(13);
        let (l, r) = cubic_cubic_pair(&f13.elem(3), &f13.elem(5)).unwrap();
        assert_eq!(sum(&l), sum(&r));
        assert_eq!(
            cubic_cubic_pair(&f7.zero(), &f7.one()),
            Err(Error::ZeroParameter)
        );
    }

    #[test]
    fn pi_identity_examples() {
        let f13 = fp(13);
        let e = |n| f13.elem(n);
        let (pi, ok) = product_discriminant_identity(&e(3), &e(5), &e(3), &e(5)).unwrap();
        assert!(pi.is_zero() && ok);
        let (_, ok) = product_discriminant_identity(&e(0), &e(1), &e(4), &e(1)).unwrap();
        assert!(ok);
    }

    #[test]
    fn remark_pipeline_examples() {
        let f13 = fp(13);
        let e = |n| f13.elem(n);
        let steps = remark_pipeline_steps(&e(0), &e(1), &e(4), &e(1)).unwrap();
        for s in &steps {
            assert!(s.holds, "{} {}", s.label, s.detail);
        }
        // already depressed: b2 = -b1
        assert!(remark_pipeline(&e(3), &e(1), &e(-3), &e(5)).unwrap());
        assert_eq!(
            remark_pipeline(&e(0), &e(1), &e(0), &e(1)),
            Err(Error::NotSquareFree)
        );
        let f37 = fp(37);
        let e = |n| f37.elem(n);
        assert!(remark_pipeline(&e(5), &e(-8), &e(11), &e(3)).unwrap());
    }

    #[test]
    fn nagao_examples() {
        let f5 = fp(5);
        let e = |n| f5.elem(n);
        let (m, t) = nagao_map_check(&e(0), &e(0), &e(0), &e(1)).unwrap();
        assert_eq!(m, t);
        let f7 = fp(7);
        let e = |n| f7.elem(n);
        let (m, t) = nagao_map_check(&e(14), &e(24), &e(14), &e(1)).unwrap();
        assert!(t > 0 && m == t);
        let f25 = FiniteField::new(5, 2).unwrap();
        let tt = f25.adjoined_root().unwrap();
        let (m, t) = nagao_map_check(&tt, &f25.one(), &f25.elem(2), &(&tt + &f25.elem(3))).unwrap();
        assert!(t > 0 && m == t);
    }

    #[test]
    fn zhang_examples() {
        let f5 = fp(5);
        let t = zhang_transform(&f5);
        assert_eq!(sum(&t.source), 1);
        assert_eq!(t.check().unwrap(), Check { lhs: 1, rhs: 1 });
        assert!(zhang_identity(&fp(7)).unwrap());
        assert!(zhang_identity(&fp(101)).unwrap());
        assert!(zhang_identity(&FiniteField::new(7, 2).unwrap()).unwrap());
    }

    #[test]
    fn descent_principle_examples() {
        let f11 = fp(11);
        let g = Poly::from_descending(&f11, &[1, 3, 0, 2]);
        let (sq, g, xg) = descent_principle_split(&g);
        assert_eq!(sq, Poly::from_descending(&f11, &[1, 0, 3, 0, 0, 0, 2]));
        assert_eq!(sum(&sq), sum(&g) + sum(&xg));
    }
}

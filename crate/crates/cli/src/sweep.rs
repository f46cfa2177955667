//! Randomized identity sweeps over a range of fields.
//!
//! Each field gets its own ChaCha8 stream (seeded with the user seed,
//! stream number `q`), so a field's cases do not depend on which other
//! fields are in the sweep or on the order workers finish in.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use qsum_core::master::{master_sides_with_budget, CoeffMatrix3};
use qsum_core::sums::{char_sum_with_budget, quadratic_in_y_count_with_budget};
use qsum_core::transforms::{
    cubic_cubic_pair, descend_biquadratic, descend_depressed, descend_product, descend_quartic,
    jacobsthal_pair, leprevost_morain, nagao_map_check, product_discriminant_identity,
    product_quartic, remark_pipeline_steps, symmetric_quartic_pair, zhang_transform, Identity,
    ProductParams,
};
use qsum_core::{Error, FieldElement, FiniteField, Poly};

use crate::report::{Record, Value};
use crate::{CliError, PrimeRange};

/// Parameter draws that keep hitting degenerate choices give up after this many tries.
const MAX_REDRAWS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Identity(Identity),
    /// Both sides of the master formula against a direct zero count.
    Master,
    /// Zero count of `f y^2 + g y + h` against a double loop.
    CountingLemma,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Identity(id) => id.name(),
            Target::Master => "master",
            Target::CountingLemma => "counting-lemma",
        }
    }

    pub fn all() -> Vec<Target> {
        let mut all: Vec<_> = Identity::ALL.into_iter().map(Target::Identity).collect();
        all.extend([Target::Master, Target::CountingLemma]);
        all
    }
}

impl FromStr for Target {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Target::all()
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| CliError::UnknownIdentity(s.to_string()))
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub target: Target,
    pub primes: PrimeRange,
    pub degrees: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    /// Largest `q` the brute-force sums may enumerate.
    pub budget: u64,
}

impl SweepConfig {
    /// The fields of the sweep in increasing order of `q`.
    pub fn fields(&self) -> Result<Vec<FiniteField>, CliError> {
        let invalid = |msg: String| Err(CliError::ConfigInvalid(msg));
        if self.primes.lo < 5 {
            return invalid(format!("lower prime bound {} is below 5", self.primes.lo));
        }
        if self.trials == 0 {
            return invalid("trials must be at least 1".into());
        }
        if self.degrees.is_empty() || self.degrees.iter().any(|k| !(1..=3).contains(k)) {
            return invalid(format!(
                "extension degrees {:?} must be drawn from 1, 2, 3",
                self.degrees
            ));
        }
        let mut fields = Vec::new();
        for p in self.primes.primes() {
            for &k in &self.degrees {
                let field =
                    FiniteField::new(p, k).map_err(|e| CliError::ConfigInvalid(e.to_string()))?;
                if field.q() > self.budget {
                    return invalid(format!(
                        "q = {} exceeds the budget {}",
                        field.q(),
                        self.budget
                    ));
                }
                fields.push(field);
            }
        }
        if fields.is_empty() {
            return invalid(format!("no primes in {}", self.primes));
        }
        fields.sort_by_key(FiniteField::q);
        fields.dedup_by_key(|f| f.q());
        Ok(fields)
    }
}

/// Runs the sweep; records are ordered by `(q, case index)`.
pub fn run(config: &SweepConfig) -> Result<Vec<Record>, CliError> {
    let fields = config.fields()?;
    let per_field: Vec<Vec<Record>> = fields.par_iter().map(|f| run_field(config, f)).collect();
    Ok(per_field.into_iter().flatten().collect())
}

fn run_field(config: &SweepConfig, field: &FiniteField) -> Vec<Record> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(field.q());
    let trials = if config.target == Target::Identity(Identity::Zhang) {
        1
    } else {
        config.trials
    };
    (0..trials)
        .map(|_| {
            let outcome = run_case(config.target, field, &mut rng, config.budget);
            let (params, lhs, rhs, pass) = match outcome {
                Ok(Some(case)) => case,
                Ok(None) => (
                    format!("no admissible parameters in {MAX_REDRAWS} draws"),
                    Value::Text(String::new()),
                    Value::Text(String::new()),
                    false,
                ),
                Err((params, e)) => (
                    params,
                    Value::Text(format!("error: {e}")),
                    Value::Text(String::new()),
                    false,
                ),
            };
            Record {
                field_q: field.q(),
                identity: config.target.name().to_string(),
                params,
                lhs,
                rhs,
                pass,
            }
        })
        .collect()
}

type Case = (String, Value, Value, bool);
type CaseResult = Result<Option<Case>, (String, Error)>;

fn draw(rng: &mut ChaCha8Rng, field: &FiniteField, n: usize) -> Vec<FieldElement> {
    (0..n)
        .map(|_| field.element(rng.gen_range(0..field.q())))
        .collect()
}

fn describe(names: &[&str], vals: &[FieldElement]) -> String {
    names
        .iter()
        .zip(vals)
        .map(|(n, v)| format!("{n}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn sums(lhs: i64, rhs: i64) -> (Value, Value, bool) {
    (Value::Int(lhs), Value::Int(rhs), lhs == rhs)
}

/// Draws parameters until `build` accepts them, then evaluates.
fn with_params<T>(
    rng: &mut ChaCha8Rng,
    field: &FiniteField,
    names: &[&str],
    build: impl Fn(&[FieldElement]) -> qsum_core::Result<T>,
    eval: impl FnOnce(T) -> qsum_core::Result<(Value, Value, bool)>,
) -> CaseResult {
    for _ in 0..MAX_REDRAWS {
        let vals = draw(rng, field, names.len());
        let params = describe(names, &vals);
        let built = match build(&vals) {
            Ok(t) => t,
            Err(
                Error::NotSquareFree
                | Error::DegenerateDiscriminant
                | Error::DegenerateParameters
                | Error::ZeroParameter,
            ) => continue,
            Err(e) => return Err((params, e)),
        };
        return match eval(built) {
            Ok((l, r, pass)) => Ok(Some((params, l, r, pass))),
            Err(e) => Err((params, e)),
        };
    }
    Ok(None)
}

fn pair_sums(budget: u64) -> impl FnOnce((Poly, Poly)) -> qsum_core::Result<(Value, Value, bool)> {
    move |(l, r)| {
        Ok(sums(
            char_sum_with_budget(&l, budget)?.value,
            char_sum_with_budget(&r, budget)?.value,
        ))
    }
}

fn run_case(target: Target, field: &FiniteField, rng: &mut ChaCha8Rng, budget: u64) -> CaseResult {
    let transform = |t: qsum_core::transforms::TransformResult| {
        let c = t.check_with_budget(budget)?;
        Ok(sums(c.lhs, c.rhs))
    };
    let id = match target {
        Target::Identity(id) => id,
        Target::Master => return master_case(field, rng, budget),
        Target::CountingLemma => return counting_case(field, rng, budget),
    };
    match id {
        Identity::Jacobsthal => with_params(
            rng,
            field,
            &["b", "c"],
            |v| jacobsthal_pair(&v[0], &v[1]),
            pair_sums(budget),
        ),
        Identity::LeprevostMorain => with_params(
            rng,
            field,
            &["a"],
            |v| Ok(leprevost_morain(&v[0])),
            transform,
        ),
        Identity::Biquadratic => with_params(
            rng,
            field,
            &["b", "c"],
            |v| descend_biquadratic(&v[0], &v[1]),
            transform,
        ),
        Identity::Product => with_params(
            rng,
            field,
            &["b1", "c1", "b2", "c2"],
            |v| descend_product(&v[0], &v[1], &v[2], &v[3]),
            transform,
        ),
        Identity::GeneralDescent => with_params(
            rng,
            field,
            &["a3", "a2", "a1", "a0"],
            |v| descend_quartic(&v[0], &v[1], &v[2], &v[3]),
            transform,
        ),
        Identity::DepressedDescent => with_params(
            rng,
            field,
            &["a", "b", "c"],
            |v| descend_depressed(&v[0], &v[1], &v[2]),
            transform,
        ),
        Identity::Symmetric => with_params(
            rng,
            field,
            &["a", "b", "c"],
            |v| symmetric_quartic_pair(&v[0], &v[1], &v[2]),
            pair_sums(budget),
        ),
        Identity::CubicCubic => with_params(
            rng,
            field,
            &["a", "b"],
            |v| cubic_cubic_pair(&v[0], &v[1]),
            pair_sums(budget),
        ),
        Identity::PiIdentity => with_params(
            rng,
            field,
            &["b1", "c1", "b2", "c2"],
            |v| Ok(v.to_vec()),
            |v| {
                let (pi, holds) = product_discriminant_identity(&v[0], &v[1], &v[2], &v[3])?;
                let params = ProductParams::new(&v[0], &v[1], &v[2], &v[3]);
                let d12 = &params.delta1 * &params.delta2;
                let disc = product_quartic(&v[0], &v[1], &v[2], &v[3])?.discriminant()?;
                let lhs = format!("16Π={}; disc={}", field.elem(16) * &pi, disc);
                let rhs = format!(
                    "B^2-4Δ1Δ2={}; Δ1Δ2Π^2={}",
                    params.big_b.square() - field.elem(4) * &d12,
                    &d12 * &pi.square()
                );
                Ok((Value::Text(lhs), Value::Text(rhs), holds))
            },
        ),
        Identity::RemarkPipeline => with_params(
            rng,
            field,
            &["b1", "c1", "b2", "c2"],
            |v| remark_pipeline_steps(&v[0], &v[1], &v[2], &v[3]),
            |steps| {
                let held = steps.iter().filter(|s| s.holds).count() as i64;
                Ok(sums(held, steps.len() as i64))
            },
        ),
        Identity::Nagao => with_params(
            rng,
            field,
            &["a3", "a2", "a1", "a0"],
            |v| nagao_map_check(&v[0], &v[1], &v[2], &v[3]),
            |(mapped, total)| Ok(sums(mapped as i64, total as i64)),
        ),
        Identity::Zhang => match transform(zhang_transform(field)) {
            Ok((l, r, pass)) => Ok(Some((String::new(), l, r, pass))),
            Err(e) => Err((String::new(), e)),
        },
    }
}

fn master_case(field: &FiniteField, rng: &mut ChaCha8Rng, budget: u64) -> CaseResult {
    let v = draw(rng, field, 9);
    let m = CoeffMatrix3::new(
        field,
        std::array::from_fn(|r| std::array::from_fn(|c| v[3 * r + c].clone())),
    )
    .expect("entries drawn from the field");
    let params = v
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    match master_sides_with_budget(&m, budget.saturating_mul(budget)) {
        // the pass flag also requires agreement with the direct count
        Ok(s) => Ok(Some((
            params,
            Value::Int(s.lhs),
            Value::Int(s.rhs),
            s.agree(),
        ))),
        Err(e) => Err((params, e)),
    }
}

fn counting_case(field: &FiniteField, rng: &mut ChaCha8Rng, budget: u64) -> CaseResult {
    for _ in 0..MAX_REDRAWS {
        let v = draw(rng, field, 12);
        let (f, g, h) = (
            Poly::new(field, v[0..4].to_vec()),
            Poly::new(field, v[4..8].to_vec()),
            Poly::new(field, v[8..12].to_vec()),
        );
        if f.is_zero() && g.is_zero() && h.is_zero() {
            continue;
        }
        let params = format!("f={f}; g={g}; h={h}");
        let formula = match quadratic_in_y_count_with_budget(&f, &g, &h, budget) {
            Ok(n) => n,
            Err(e) => return Err((params, e)),
        };
        let mut direct = 0u64;
        for x in field.elements() {
            let (a, b, c) = (f.eval(&x), g.eval(&x), h.eval(&x));
            direct += field
                .elements()
                .filter(|y| (&a * &y.square() + &b * y + c.clone()).is_zero())
                .count() as u64;
        }
        let (l, r, pass) = sums(formula as i64, direct as i64);
        return Ok(Some((params, l, r, pass)));
    }
    Ok(None)
}

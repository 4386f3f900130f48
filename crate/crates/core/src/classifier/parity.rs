use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};
use crate::freegroup::{b_word, AbelianImage, FreeWord, Generator};
use crate::fundamental_groups::HomClassMA;
use crate::param_braid::ParamBraid;
use crate::torus_braid::PureBraidT2;

use super::witness::{system_sides, WitnessTriple};

/// `x^e y^f B^t y^-f x^-e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConjFactor {
    pub e: i64,
    pub f: i64,
    pub t: i64,
}

impl ConjFactor {
    pub fn new(e: i64, f: i64, t: i64) -> Self {
        ConjFactor { e, f, t }
    }

    pub fn word(&self) -> Result<FreeWord> {
        FreeWord::xy_power(self.e, self.f).conjugate(&b_word().pow(self.t)?)
    }
}

pub fn expand_factors(factors: &[ConjFactor]) -> Result<FreeWord> {
    let mut w = FreeWord::identity();
    for f in factors {
        w = w.concat(&f.word()?)?;
    }
    Ok(w)
}

/// The general shape forced on a solution by the projection constraints:
/// `P₁ = (x^(r−2m₁) y^(−2n₁) A₁; m₁, n₁)`, `P₂ = (A₂; −s, r)`,
/// `P₃ = (x^(−n₁) A₃; −u, v)`, each `Aⱼ` a product of B-conjugates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CandidateFamily {
    pub m1: i64,
    pub n1: i64,
    pub a1: Vec<ConjFactor>,
    pub a2: Vec<ConjFactor>,
    pub a3: Vec<ConjFactor>,
}

impl CandidateFamily {
    pub fn trivial() -> Self {
        CandidateFamily::default()
    }

    pub fn factor_count(&self) -> usize {
        self.a1.len() + self.a2.len() + self.a3.len()
    }

    /// Sum of the B-exponents in `A₁`.
    pub fn a1_exponent_sum(&self) -> i64 {
        self.a1.iter().map(|f| f.t).sum()
    }

    pub fn build(&self, cls: &HomClassMA) -> Result<WitnessTriple> {
        let head = FreeWord::xy_power(
            error::sub(cls.r, error::mul(2, self.m1)?)?,
            error::mul(-2, self.n1)?,
        );
        let p1 = PureBraidT2::new(head.concat(&expand_factors(&self.a1)?)?, self.m1, self.n1);
        let p2 = PureBraidT2::new(expand_factors(&self.a2)?, error::sub(0, cls.s)?, cls.r);
        let p3_free = FreeWord::power_of(Generator::X, error::sub(0, self.n1)?).concat(&expand_factors(&self.a3)?)?;
        let p3 = PureBraidT2::new(p3_free, error::sub(0, cls.u)?, cls.v);
        Ok(WitnessTriple::from_pure(p1, p2, p3))
    }
}

/// `LHS · RHS⁻¹` of the third equation.
pub fn third_residual(w: &WitnessTriple) -> Result<ParamBraid> {
    let [_, _, (l, r)] = system_sides(w)?;
    l.pmul(&r.pinv()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityReport {
    pub r: i64,
    pub k: i64,
    pub candidate: CandidateFamily,
    /// Free part of the residual of the third equation.
    pub residual: FreeWord,
    pub gamma_residual: AbelianImage,
    pub epsilon: i64,
    pub epsilon_odd: bool,
    /// `2·ΣA₁ + 2(−n₁ + (k − m₁)(2n₁ + 1)) + 1`.
    pub epsilon_formula: i64,
}

impl ParityReport {
    /// The residual is balanced with odd ε, so it is not the identity.
    pub fn is_obstruction(&self) -> bool {
        self.gamma_residual.is_zero() && self.epsilon_odd
    }
}

/// The closed form of ε on the residual.
///
/// With `a = r − 2m₁` and `b = −2n₁` the residual has
/// `ε = 2·ΣA₁ + ε(x^a y^b φ(x^a y^b)) + 1`, and
/// `ε(x^a y^b (Bx⁻¹)^a (By⁻¹)^b) = a + b − ab`.
pub fn epsilon_formula(cls: &HomClassMA, cand: &CandidateFamily) -> i64 {
    let k = cls.r.div_euclid(2);
    2 * cand.a1_exponent_sum() + 2 * (-cand.n1 + (k - cand.m1) * (2 * cand.n1 + 1)) + 1
}

/// Evaluates γ and ε on the third-equation residual of a candidate.
pub fn parity_certificate(cls: &HomClassMA, cand: &CandidateFamily) -> Result<ParityReport> {
    if cls.r.rem_euclid(2) != 0 {
        return Err(Error::Domain(format!("parity obstruction needs even r, got {}", cls.r)));
    }
    let q = third_residual(&cand.build(cls)?)?;
    if !q.is_pure() || q.k != 0 || q.full.pure.m != 0 || q.full.pure.n != 0 {
        return Err(Error::Malformed(format!("residual {q} is not in the free factor")));
    }
    let residual = q.full.pure.free;
    let gamma_residual = residual.gamma();
    let epsilon = residual.epsilon()?;
    Ok(ParityReport {
        r: cls.r,
        k: cls.r / 2,
        candidate: cand.clone(),
        residual,
        gamma_residual,
        epsilon,
        epsilon_odd: epsilon.rem_euclid(2) == 1,
        epsilon_formula: epsilon_formula(cls, cand),
    })
}

/// A uniformly shaped random candidate: `m₁, n₁, e, f ∈ [−E, E]`,
/// `t ∈ [−E, E] ∖ {0}`, at most `max_factors` factors in total.
pub fn sample_candidate<R: Rng>(rng: &mut R, max_factors: usize, max_exp: i64) -> CandidateFamily {
    let e = max_exp.max(1);
    let mut cand = CandidateFamily {
        m1: rng.gen_range(-max_exp..=max_exp),
        n1: rng.gen_range(-max_exp..=max_exp),
        ..CandidateFamily::default()
    };
    let total = rng.gen_range(0..=max_factors);
    for _ in 0..total {
        let mut t = rng.gen_range(-e..=e - 1);
        if t >= 0 {
            t += 1;
        }
        let f = ConjFactor::new(rng.gen_range(-max_exp..=max_exp), rng.gen_range(-max_exp..=max_exp), t);
        match rng.gen_range(0..3) {
            0 => cand.a1.push(f),
            1 => cand.a2.push(f),
            _ => cand.a3.push(f),
        }
    }
    cand
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSummary {
    pub seed: u64,
    pub samples: usize,
    pub max_factors: usize,
    pub max_exp: i64,
    pub all_obstructed: bool,
}

/// Runs [`parity_certificate`] on `samples` seeded random candidates.
pub fn sampled_parity(cls: &HomClassMA, seed: u64, samples: usize, max_factors: usize, max_exp: i64) -> Result<SampleSummary> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut all = true;
    for _ in 0..samples {
        let cand = sample_candidate(&mut rng, max_factors, max_exp);
        let rep = parity_certificate(cls, &cand)?;
        all &= rep.is_obstruction() && rep.epsilon == rep.epsilon_formula;
    }
    Ok(SampleSummary { seed, samples, max_factors, max_exp, all_obstructed: all })
}

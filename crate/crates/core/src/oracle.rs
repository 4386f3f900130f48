//! Brute-force cross-checks for the main library: a naive free reducer, a
//! collection-process decomposition into B-conjugates, and bounded searches
//! over the braid equation system and over fiber-level lifting data.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::classifier::diagram::{check_diagram, DiagramImages, DiagramSetting, DiagramText};
use crate::classifier::parity::{CandidateFamily, ConjFactor};
use crate::classifier::t3::extend_t2_diagram_to_t3;
use crate::classifier::witness::{system_holds, WitnessText};
use crate::error::{Error, Result};
use crate::freegroup::{FreeWord, Generator, Syllable};
use crate::fundamental_groups::{push_words, theta_on_generators, HomClassMA, HomClassT3, Involution};
use crate::group::eval_word;
use crate::param_braid::{c_conjugate, BundleKind, ParamBraid};
use crate::torus_braid::{FullBraidT2, PureBraidT2};

/// Cancels adjacent inverse letters, one pass at a time, until nothing changes.
pub fn naive_reduce(letters: &[(Generator, i8)]) -> FreeWord {
    let mut cur: Vec<(Generator, i8)> = letters.to_vec();
    loop {
        let mut next = Vec::with_capacity(cur.len());
        let mut changed = false;
        let mut i = 0;
        while i < cur.len() {
            if i + 1 < cur.len() && cur[i].0 == cur[i + 1].0 && cur[i].1 == -cur[i + 1].1 {
                i += 2;
                changed = true;
            } else {
                next.push(cur[i]);
                i += 1;
            }
        }
        cur = next;
        if !changed {
            break;
        }
    }
    let mut syl: Vec<Syllable> = Vec::new();
    for (g, e) in cur {
        match syl.last_mut() {
            Some(s) if s.gen == g => s.exp += e as i64,
            _ => syl.push(Syllable::new(g, e as i64)),
        }
    }
    FreeWord::try_from_reduced(syl).expect("a fixed point of cancellation is reduced")
}

/// `y^f x y^-f x^-1` as B-conjugates.
fn collect_x_past_y(f: i64) -> Vec<ConjFactor> {
    if f >= 0 {
        (1..=f).rev().map(|j| ConjFactor::new(0, j, 1)).collect()
    } else {
        (0..-f).rev().map(|j| ConjFactor::new(0, -j, -1)).collect()
    }
}

/// Writes a balanced word as a product of `x^e y^f B^t y^-f x^-e`.
///
/// The word is read letter by letter while keeping the prefix in the form
/// `R · x^e y^f`; moving an `x` to the left of `y^f` emits
/// `x^e (y^f x^±1 y^-f x^∓1) x^-e`, which is collected into conjugates.
pub fn express_as_b_conjugates(a: &FreeWord) -> Result<Vec<ConjFactor>> {
    let g = a.gamma();
    if !g.is_zero() {
        return Err(Error::Unbalanced { ex: g.ex, ey: g.ey });
    }
    let (mut e, mut f) = (0i64, 0i64);
    let mut out = Vec::new();
    for (gen, d) in a.letters() {
        match gen {
            Generator::Y => f += d as i64,
            Generator::X => {
                let shift = |c: ConjFactor, by: i64| ConjFactor::new(c.e + by, c.f, c.t);
                if d > 0 {
                    out.extend(collect_x_past_y(f).into_iter().map(|c| shift(c, e)));
                } else {
                    // y^f x^-1 y^-f x = x^-1 (y^f x y^-f x^-1)^-1 x
                    out.extend(collect_x_past_y(f).into_iter().rev().map(|c| shift(ConjFactor::new(c.e, c.f, -c.t), e - 1)));
                }
                e += d as i64;
            }
        }
    }
    Ok(out)
}

/// ε computed as the total B-exponent of the decomposition.
pub fn epsilon_by_collection(a: &FreeWord) -> Result<i64> {
    Ok(express_as_b_conjugates(a)?.iter().map(|c| c.t).sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub max_factors: usize,
    pub max_exp: i64,
}

/// `x^e y^f B^t y^-f x^-e` with `e, f ∈ [−E, E]`, `t ∈ [−E, E] ∖ {0}`, in lexicographic order.
pub fn factor_universe(max_exp: i64) -> Vec<ConjFactor> {
    let r = -max_exp..=max_exp;
    let mut out = Vec::new();
    for e in r.clone() {
        for f in r.clone() {
            for t in r.clone().filter(|&t| t != 0) {
                out.push(ConjFactor::new(e, f, t));
            }
        }
    }
    out
}

/// Number of candidates in the bounded family.
pub fn family_size(b: SearchBounds) -> u128 {
    let side = (2 * b.max_exp.max(0) + 1) as u128;
    let u = factor_universe(b.max_exp).len() as u128;
    let mut lists = 0u128;
    for total in 0..=b.max_factors as u32 {
        let splits = ((total + 1) * (total + 2) / 2) as u128;
        lists = lists.saturating_add(splits.saturating_mul(u.saturating_pow(total)));
    }
    side * side * lists
}

/// Every `(j₁, j₂, j₃)` with `j₁ + j₂ + j₃ ≤ max`, by total then lexicographically.
fn splits(max: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for total in 0..=max {
        for j1 in 0..=total {
            for j2 in 0..=total - j1 {
                out.push([j1, j2, total - j1 - j2]);
            }
        }
    }
    out
}

fn tuples(universe: &[ConjFactor], len: usize, f: &mut dyn FnMut(&[ConjFactor])) {
    fn go(u: &[ConjFactor], len: usize, acc: &mut Vec<ConjFactor>, f: &mut dyn FnMut(&[ConjFactor])) {
        if acc.len() == len {
            f(acc);
            return;
        }
        for c in u {
            acc.push(*c);
            go(u, len, acc, f);
            acc.pop();
        }
    }
    go(universe, len, &mut Vec::with_capacity(len), f)
}

/// `(m₁, n₁)` in the box, lexicographically.
fn shifts(max_exp: i64) -> Vec<(i64, i64)> {
    let r = -max_exp.max(0)..=max_exp.max(0);
    r.clone().flat_map(|m| r.clone().map(move |n| (m, n))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub candidate: CandidateFamily,
    pub witness: WitnessText,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub class: HomClassMA,
    pub bounds: SearchBounds,
    /// Size of the bounded candidate family.
    pub family_size: u128,
    /// Candidates that reached `verify_system`.
    pub examined: u128,
    pub hits: Vec<SearchHit>,
}

/// Runs `verify_system` on every candidate in the bounds. Only for tiny boxes.
pub fn search_system_exhaustive(cls: &HomClassMA, bounds: SearchBounds) -> Result<SearchReport> {
    let u = factor_universe(bounds.max_exp);
    let mut hits = Vec::new();
    let mut examined = 0u128;
    let mut err = None;
    for (m1, n1) in shifts(bounds.max_exp) {
        for [j1, j2, j3] in splits(bounds.max_factors) {
            tuples(&u, j1, &mut |a1| {
                tuples(&u, j2, &mut |a2| {
                    tuples(&u, j3, &mut |a3| {
                        let cand = CandidateFamily { m1, n1, a1: a1.to_vec(), a2: a2.to_vec(), a3: a3.to_vec() };
                        examined += 1;
                        match try_candidate(cls, cand) {
                            Ok(Some(h)) => hits.push(h),
                            Ok(None) => {}
                            Err(e) => err = err.take().or(Some(e)),
                        }
                    })
                })
            });
        }
    }
    if let Some(e) = err {
        return Err(e);
    }
    Ok(SearchReport { class: *cls, bounds, family_size: family_size(bounds), examined, hits })
}

fn try_candidate(cls: &HomClassMA, cand: CandidateFamily) -> Result<Option<SearchHit>> {
    let w = cand.build(cls)?;
    Ok(system_holds(&w, cls).then(|| SearchHit { witness: w.to_text(), candidate: cand }))
}

// Sieve: the free part of the third-equation residual is mapped to the
// integral Heisenberg group mod 4, a quotient of F(x, y). A candidate whose
// image is not the identity cannot solve the system.

const HM: i64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Heis(i64, i64, i64);

impl Heis {
    const ID: Heis = Heis(0, 0, 0);

    fn mul(self, o: Heis) -> Heis {
        Heis((self.0 + o.0).rem_euclid(HM), (self.1 + o.1).rem_euclid(HM), (self.2 + o.2 + self.0 * o.1).rem_euclid(HM))
    }

    fn inv(self) -> Heis {
        Heis((-self.0).rem_euclid(HM), (-self.1).rem_euclid(HM), (-self.2 + self.0 * self.1).rem_euclid(HM))
    }

    fn of(w: &FreeWord) -> Heis {
        w.syllables().iter().fold(Heis::ID, |acc, s| {
            let e = s.exp.rem_euclid(HM);
            acc.mul(match s.gen {
                Generator::X => Heis(e, 0, 0),
                Generator::Y => Heis(0, e, 0),
            })
        })
    }
}

/// `(h(A), h(f(A)))` for a list `A`, `f` the σ- or c-action on free parts.
type Pair = (Heis, Heis);

fn pmul(a: Pair, b: Pair) -> Pair {
    (a.0.mul(b.0), a.1.mul(b.1))
}

fn sigma_free(w: &FreeWord) -> Result<FreeWord> {
    Ok(PureBraidT2::from_free(w.clone()).sigma_conjugate()?.free)
}

fn c_free(w: &FreeWord) -> Result<FreeWord> {
    Ok(c_conjugate(&PureBraidT2::from_free(w.clone()).into(), BundleKind::MaUnipotent, 1)?.pure.free)
}

/// Reachable-state counts for lists of each length `0..=max`.
fn distributions<S: Ord + Copy>(step: &[(S, u128)], id: S, op: impl Fn(S, S) -> S, max: usize) -> Vec<BTreeMap<S, u128>> {
    let mut out = vec![BTreeMap::from([(id, 1u128)])];
    for _ in 0..max {
        let mut next = BTreeMap::new();
        for (s, n) in out.last().expect("non-empty") {
            for (t, m) in step {
                *next.entry(op(*s, *t)).or_insert(0u128) += n * m;
            }
        }
        out.push(next);
    }
    out
}

struct Sieve {
    universe: Vec<ConjFactor>,
    sigma_step: Vec<Pair>,
    c_step: Vec<Pair>,
    d1: Vec<BTreeMap<Pair, u128>>,
    d2: Vec<BTreeMap<Pair, u128>>,
    d3: Vec<BTreeMap<Heis, u128>>,
}

impl Sieve {
    fn new(bounds: SearchBounds) -> Result<Sieve> {
        let universe = factor_universe(bounds.max_exp);
        let mut sigma_step = Vec::new();
        let mut c_step = Vec::new();
        for f in &universe {
            let w = f.word()?;
            sigma_step.push((Heis::of(&w), Heis::of(&sigma_free(&w)?)));
            c_step.push((Heis::of(&w), Heis::of(&c_free(&w)?)));
        }
        let count = |v: &[Pair]| {
            let mut m = BTreeMap::new();
            for p in v {
                *m.entry(*p).or_insert(0u128) += 1;
            }
            m.into_iter().collect::<Vec<_>>()
        };
        let single: Vec<(Heis, u128)> = count(&sigma_step).iter().map(|(p, n)| (p.0, *n)).fold(BTreeMap::new(), |mut m, (h, n)| {
            *m.entry(h).or_insert(0u128) += n;
            m
        }).into_iter().collect();
        let id = (Heis::ID, Heis::ID);
        Ok(Sieve {
            d1: distributions(&count(&sigma_step), id, pmul, bounds.max_factors),
            d2: distributions(&count(&c_step), id, pmul, bounds.max_factors),
            d3: distributions(&single, Heis::ID, Heis::mul, bounds.max_factors),
            universe,
            sigma_step,
            c_step,
        })
    }
}

/// Constant pieces of the residual `V ψ(A₂) V⁻¹ A₂⁻¹ · u φ(u) · B` for fixed `(m₁, n₁)`,
/// with `u = x^(r−2m₁) y^(−2n₁) A₁` and `V = x^(−n₁) A₃`.
struct Cell {
    head: Heis,
    sigma_head: Heis,
    xv: Heis,
    b: Heis,
}

impl Cell {
    fn new(cls: &HomClassMA, m1: i64, n1: i64) -> Result<Cell> {
        let head = FreeWord::xy_power(cls.r - 2 * m1, -2 * n1);
        Ok(Cell {
            head: Heis::of(&head),
            sigma_head: Heis::of(&sigma_free(&head)?),
            xv: Heis::of(&FreeWord::power_of(Generator::X, -n1)),
            b: Heis::of(&crate::freegroup::b_word()),
        })
    }

    fn residual(&self, s1: Pair, s2: Pair, s3: Heis) -> Heis {
        let v = self.xv.mul(s3);
        v.mul(s2.1).mul(v.inv()).mul(s2.0.inv()).mul(self.head).mul(s1.0).mul(self.sigma_head).mul(s1.1).mul(self.b)
    }
}

/// Predicted image of the residual; exposed for cross-checking against the
/// braid arithmetic.
pub fn sieve_image(cls: &HomClassMA, cand: &CandidateFamily) -> Result<(i64, i64, i64)> {
    let cell = Cell::new(cls, cand.m1, cand.n1)?;
    let fold = |list: &[ConjFactor], act: fn(&FreeWord) -> Result<FreeWord>| -> Result<Pair> {
        let mut acc = (Heis::ID, Heis::ID);
        for f in list {
            let w = f.word()?;
            acc = pmul(acc, (Heis::of(&w), Heis::of(&act(&w)?)));
        }
        Ok(acc)
    };
    let s1 = fold(&cand.a1, sigma_free)?;
    let s2 = fold(&cand.a2, c_free)?;
    let s3 = fold(&cand.a3, sigma_free)?.0;
    let h = cell.residual(s1, s2, s3);
    Ok((h.0, h.1, h.2))
}

/// Image of a word in the Heisenberg quotient, as used by the sieve.
pub fn heisenberg_image(w: &FreeWord) -> (i64, i64, i64) {
    let h = Heis::of(w);
    (h.0, h.1, h.2)
}

pub const DEFAULT_BUDGET: u128 = 2_000_000;

/// All solutions of the system inside the bounded family, in lexicographic
/// order of `(m₁, n₁, split, A₁, A₂, A₃)`.
///
/// Candidates are filtered through the Heisenberg quotient first; only
/// survivors are built and passed to `verify_system`. If more than `budget`
/// candidates survive, nothing is enumerated and `BudgetExceeded` is returned.
pub fn search_system(cls: &HomClassMA, bounds: SearchBounds, budget: u128) -> Result<SearchReport> {
    let sieve = Sieve::new(bounds)?;
    let mut plan = Vec::new();
    let mut survivors = 0u128;
    for (m1, n1) in shifts(bounds.max_exp) {
        let cell = Cell::new(cls, m1, n1)?;
        for sp in splits(bounds.max_factors) {
            let mut n = 0u128;
            for (s1, c1) in &sieve.d1[sp[0]] {
                for (s2, c2) in &sieve.d2[sp[1]] {
                    for (s3, c3) in &sieve.d3[sp[2]] {
                        if cell.residual(*s1, *s2, *s3) == Heis::ID {
                            n = n.saturating_add(c1 * c2 * c3);
                        }
                    }
                }
            }
            if n > 0 {
                survivors = survivors.saturating_add(n);
                plan.push((m1, n1, sp));
            }
        }
    }
    if survivors > budget {
        return Err(Error::BudgetExceeded { candidates: survivors, budget });
    }
    let mut hits = Vec::new();
    let mut examined = 0u128;
    for (m1, n1, sp) in plan {
        let cell = Cell::new(cls, m1, n1)?;
        enumerate_cell(&sieve, &cell, sp, &mut |a1, a2, a3| {
            examined += 1;
            let cand = CandidateFamily { m1, n1, a1: a1.to_vec(), a2: a2.to_vec(), a3: a3.to_vec() };
            if let Some(h) = try_candidate(cls, cand)? {
                hits.push(h);
            }
            Ok(())
        })?;
    }
    Ok(SearchReport { class: *cls, bounds, family_size: family_size(bounds), examined, hits })
}

type Visit<'a> = dyn FnMut(&[ConjFactor], &[ConjFactor], &[ConjFactor]) -> Result<()> + 'a;

/// Depth-first over the three lists, descending only into prefixes that can
/// still complete to a residual in the kernel of the sieve.
fn enumerate_cell(sieve: &Sieve, cell: &Cell, sp: [usize; 3], visit: &mut Visit) -> Result<()> {
    let good1: BTreeSet<Pair> = sieve.d1[sp[0]]
        .keys()
        .filter(|s1| sieve.d2[sp[1]].keys().any(|s2| sieve.d3[sp[2]].keys().any(|s3| cell.residual(**s1, *s2, *s3) == Heis::ID)))
        .copied()
        .collect();
    let mut a1 = Vec::new();
    dfs_pairs(&sieve.universe, &sieve.sigma_step, &sieve.d1, sp[0], (Heis::ID, Heis::ID), &good1, &mut a1, &mut |a1, s1| {
        let good2: BTreeSet<Pair> = sieve.d2[sp[1]]
            .keys()
            .filter(|s2| sieve.d3[sp[2]].keys().any(|s3| cell.residual(s1, **s2, *s3) == Heis::ID))
            .copied()
            .collect();
        let mut a2 = Vec::new();
        dfs_pairs(&sieve.universe, &sieve.c_step, &sieve.d2, sp[1], (Heis::ID, Heis::ID), &good2, &mut a2, &mut |a2, s2| {
            let good3: BTreeSet<Pair> = sieve.d3[sp[2]]
                .keys()
                .filter(|s3| cell.residual(s1, s2, **s3) == Heis::ID)
                .map(|s3| (*s3, Heis::ID))
                .collect();
            let d3: Vec<BTreeMap<Pair, u128>> =
                sieve.d3.iter().map(|m| m.iter().map(|(h, n)| ((*h, Heis::ID), *n)).collect()).collect();
            let step3: Vec<Pair> = sieve.sigma_step.iter().map(|p| (p.0, Heis::ID)).collect();
            let mut a3 = Vec::new();
            dfs_pairs(&sieve.universe, &step3, &d3, sp[2], (Heis::ID, Heis::ID), &good3, &mut a3, &mut |a3, _| visit(a1, a2, a3))
        })
    })
}

#[allow(clippy::too_many_arguments)]
fn dfs_pairs(
    universe: &[ConjFactor],
    step: &[Pair],
    dist: &[BTreeMap<Pair, u128>],
    len: usize,
    state: Pair,
    good: &BTreeSet<Pair>,
    acc: &mut Vec<ConjFactor>,
    leaf: &mut dyn FnMut(&[ConjFactor], Pair) -> Result<()>,
) -> Result<()> {
    let rem = len - acc.len();
    if rem == 0 {
        return if good.contains(&state) { leaf(acc, state) } else { Ok(()) };
    }
    for (f, s) in universe.iter().zip(step) {
        let next = pmul(state, *s);
        if !dist[rem - 1].keys().any(|d| good.contains(&pmul(next, *d))) {
            continue;
        }
        acc.push(*f);
        dfs_pairs(universe, step, dist, len, next, good, acc, leaf)?;
        acc.pop();
    }
    Ok(())
}

/// Fiber-level lifting data found by brute force for a T³ class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct T2DataHit {
    pub images: DiagramText,
}

/// Searches `ψ̄` on the two fiber generators of the orbit group among
/// `(x^a y^b; m, n)` (times σ where θ requires it) with all entries in
/// `[−bound, bound]`, sets `φ̄ = ψ̄ ∘ push`, extends with
/// [`extend_t2_diagram_to_t3`] and keeps the data that pass `check_diagram`.
pub fn search_t2_data(cls: &HomClassT3, inv: Involution, bound: i64, limit: usize) -> Result<Vec<T2DataHit>> {
    if inv == Involution::Tau {
        return Err(Error::Domain("tau is the involution of MA, not of T3".into()));
    }
    let theta = theta_on_generators(inv);
    let r: Vec<i64> = (-bound..=bound).collect();
    let mut boxes = Vec::new();
    for &a in &r {
        for &b in &r {
            for &m in &r {
                for &n in &r {
                    boxes.push(PureBraidT2::new(FreeWord::xy_power(a, b), m, n));
                }
            }
        }
    }
    let kind = BundleKind::T3Trivial;
    let id = ParamBraid::identity(kind);
    let setting = DiagramSetting::T3(*cls, inv);
    let push = push_words(inv);
    let target = cls.generator_images().map(crate::fundamental_groups::GroupElem::T3);
    let mut hits = Vec::new();
    for p in &boxes {
        let g0 = FullBraidT2::new(p.clone(), theta[0]);
        for q in &boxes {
            let g1 = FullBraidT2::new(q.clone(), theta[1]);
            let psibar = [g0.clone(), g1];
            let lifted = [ParamBraid::new(psibar[0].clone(), 0, kind), ParamBraid::new(psibar[1].clone(), 0, kind)];
            let phibar = [eval_word(&id, &lifted, &push[0])?.full, eval_word(&id, &lifted, &push[1])?.full];
            let images: DiagramImages = extend_t2_diagram_to_t3(&phibar, &psibar, cls.u, cls.v);
            // cheap necessary condition before the full check
            if images.phi.iter().any(|x| !x.is_pure())
                || (0..2).any(|i| images.phi[i].project_param().ok() != Some(target[i]))
            {
                continue;
            }
            if check_diagram(&images, &setting)?.passed() {
                hits.push(T2DataHit { images: images.to_text() });
                if hits.len() >= limit {
                    return Ok(hits);
                }
            }
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::parity::{sample_candidate, third_residual};
    use crate::classifier::witness::witness_ma;
    use rand::{Rng, SeedableRng};

    fn word(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn naive_examples() {
        use Generator::*;
        assert_eq!(naive_reduce(&[(X, 1), (X, -1), (Y, 1)]), FreeWord::y());
        assert_eq!(naive_reduce(&[]), FreeWord::identity());
        assert_eq!(naive_reduce(&[(X, 1), (Y, 1), (Y, -1), (X, -1), (X, -1)]), word("x^-1"));
    }

    #[test]
    fn b_decomposes_to_itself() {
        assert_eq!(express_as_b_conjugates(&word("B")).unwrap(), vec![ConjFactor::new(0, 0, 1)]);
    }

    #[test]
    fn commutator_x2_y() {
        let c = word("x^2 y x^-2 y^-1");
        let f = express_as_b_conjugates(&c).unwrap();
        assert_eq!(f.iter().map(|c| c.t).sum::<i64>(), -2);
        assert_eq!(crate::classifier::parity::expand_factors(&f).unwrap(), c);
    }

    #[test]
    fn unbalanced_is_rejected() {
        assert!(matches!(express_as_b_conjugates(&word("x y")), Err(Error::Unbalanced { ex: 1, ey: 1 })));
    }

    #[test]
    fn family_size_counts() {
        let b = SearchBounds { max_factors: 1, max_exp: 1 };
        assert_eq!(factor_universe(1).len(), 18);
        assert_eq!(family_size(b), 9 * (1 + 3 * 18));
        assert_eq!(family_size(SearchBounds { max_factors: 0, max_exp: 0 }), 1);
    }

    #[test]
    fn heisenberg_of_b() {
        assert_eq!(heisenberg_image(&word("B")), (0, 0, 3));
    }

    #[test]
    fn sieve_matches_braid_residual() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let cls = HomClassMA::new(rng.gen_range(-4..=4), rng.gen_range(-2..=2), rng.gen_range(-2..=2), rng.gen_range(-2..=2));
            let cand = sample_candidate(&mut rng, 3, 2);
            let q = third_residual(&cand.build(&cls).unwrap()).unwrap();
            assert_eq!(sieve_image(&cls, &cand).unwrap(), heisenberg_image(&q.full.pure.free), "{cls} {cand:?}");
        }
    }

    #[test]
    fn sieve_agrees_with_exhaustive() {
        let b = SearchBounds { max_factors: 1, max_exp: 1 };
        for cls in [HomClassMA::new(1, 0, 0, 0), HomClassMA::new(-1, 1, 0, -1), HomClassMA::new(2, 0, 0, 0)] {
            let fast = search_system(&cls, b, DEFAULT_BUDGET).unwrap();
            let slow = search_system_exhaustive(&cls, b).unwrap();
            assert_eq!(fast.hits, slow.hits, "{cls}");
            assert_eq!(slow.examined, family_size(b));
        }
    }

    #[test]
    fn odd_witness_is_found() {
        let cls = HomClassMA::new(1, 2, -1, 0);
        let rep = search_system(&cls, SearchBounds { max_factors: 1, max_exp: 1 }, DEFAULT_BUDGET).unwrap();
        let w = witness_ma(&cls).unwrap().to_text();
        assert!(rep.hits.iter().any(|h| h.witness == w));
        let none = search_system(&cls, SearchBounds { max_factors: 0, max_exp: 0 }, DEFAULT_BUDGET).unwrap();
        assert!(none.hits.is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let cls = HomClassMA::new(1, 0, 0, 0);
        let e = search_system(&cls, SearchBounds { max_factors: 2, max_exp: 1 }, 3).unwrap_err();
        assert!(matches!(e, Error::BudgetExceeded { budget: 3, .. }));
    }

    #[test]
    fn t2_data_exists_for_tau1() {
        let cls = HomClassT3::new(1, 0, 0, 1, 0, 0);
        let hits = search_t2_data(&cls, Involution::Tau1, 1, 5).unwrap();
        assert!(!hits.is_empty());
    }
}

#![allow(dead_code)]

use braidulam::fundamental_groups::{Basis, KleinS1Elem, MAElem, MatrixGL2Z, T3Elem};
use braidulam::{BundleKind, FreeWord, FullBraidT2, Generator, ParamBraid, PureBraidT2, Syllable};
use proptest::prelude::*;
use rand::Rng;

pub fn letters_strategy(max_len: usize) -> impl Strategy<Value = Vec<(Generator, i8)>> {
    prop::collection::vec(
        (prop_oneof![Just(Generator::X), Just(Generator::Y)], prop_oneof![Just(1i8), Just(-1i8)]),
        0..max_len,
    )
}

pub fn word_strategy(max_syl: usize, max_exp: i64) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((any::<bool>(), -max_exp..=max_exp), 0..max_syl).prop_map(|v| {
        let syl = v.into_iter().map(|(g, e)| Syllable::new(if g { Generator::X } else { Generator::Y }, e));
        FreeWord::from_syllables(syl).unwrap()
    })
}

pub fn pure_strategy() -> impl Strategy<Value = PureBraidT2> {
    (word_strategy(6, 3), -5i64..=5, -5i64..=5).prop_map(|(w, m, n)| PureBraidT2::new(w, m, n))
}

pub fn full_strategy() -> impl Strategy<Value = FullBraidT2> {
    (pure_strategy(), any::<bool>()).prop_map(|(p, s)| FullBraidT2::new(p, s))
}

pub fn param_strategy(kind: BundleKind) -> impl Strategy<Value = ParamBraid> {
    (full_strategy(), -3i64..=3).prop_map(move |(f, k)| ParamBraid::new(f, k, kind))
}

pub fn ma_strategy(monodromy: MatrixGL2Z, basis: Basis) -> impl Strategy<Value = MAElem> {
    (-6i64..=6, -6i64..=6, -4i64..=4).prop_map(move |(a, b, k)| MAElem::new(a, b, k, monodromy, basis))
}

pub fn t3_strategy() -> impl Strategy<Value = T3Elem> {
    (-9i64..=9, -9i64..=9, -9i64..=9).prop_map(|(a, b, c)| T3Elem(a, b, c))
}

pub fn klein_strategy() -> impl Strategy<Value = KleinS1Elem> {
    (-9i64..=9, -9i64..=9, -9i64..=9).prop_map(|(p, q, r)| KleinS1Elem::new(p, q, r))
}

// Seeded generators for the acceptance harness and corpus tests.

pub fn random_letters<R: Rng>(rng: &mut R, max_len: usize) -> Vec<(Generator, i8)> {
    let n = rng.gen_range(0..=max_len);
    (0..n)
        .map(|_| {
            let g = if rng.gen_bool(0.5) { Generator::X } else { Generator::Y };
            (g, if rng.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect()
}

pub fn random_word<R: Rng>(rng: &mut R, max_syl: usize, max_exp: i64) -> FreeWord {
    let n = rng.gen_range(0..=max_syl);
    let syl = (0..n).map(|_| {
        let g = if rng.gen_bool(0.5) { Generator::X } else { Generator::Y };
        Syllable::new(g, rng.gen_range(-max_exp..=max_exp))
    });
    FreeWord::from_syllables(syl).unwrap()
}

/// A random word times the correction `y^-ey x^-ex` that balances it.
pub fn random_balanced<R: Rng>(rng: &mut R, max_syl: usize, max_exp: i64) -> FreeWord {
    let w = random_word(rng, max_syl, max_exp);
    let g = w.gamma();
    w.concat(&FreeWord::power_of(Generator::Y, -g.ey)).unwrap().concat(&FreeWord::power_of(Generator::X, -g.ex)).unwrap()
}

pub fn random_pure<R: Rng>(rng: &mut R) -> PureBraidT2 {
    PureBraidT2::new(random_word(rng, 6, 3), rng.gen_range(-5..=5), rng.gen_range(-5..=5))
}

pub fn random_full<R: Rng>(rng: &mut R) -> FullBraidT2 {
    FullBraidT2::new(random_pure(rng), rng.gen_bool(0.5))
}

pub fn random_param<R: Rng>(rng: &mut R, kind: BundleKind) -> ParamBraid {
    ParamBraid::new(random_full(rng), rng.gen_range(-3..=3), kind)
}

pub fn random_ma<R: Rng>(rng: &mut R, monodromy: MatrixGL2Z, basis: Basis) -> MAElem {
    MAElem::new(rng.gen_range(-6..=6), rng.gen_range(-6..=6), rng.gen_range(-4..=4), monodromy, basis)
}

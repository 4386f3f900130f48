//! Reduced words in the free group F(x, y).
//!
//! Words are kept in syllable (run-length) form and every constructor reduces
//! eagerly, so a [`FreeWord`] value is always freely reduced. Exponents are
//! signed 64-bit integers with checked arithmetic.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{self, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    X,
    Y,
}

impl Generator {
    pub const ALL: [Generator; 2] = [Generator::X, Generator::Y];

    pub fn symbol(self) -> char {
        match self {
            Generator::X => 'x',
            Generator::Y => 'y',
        }
    }
}

/// A power `gen^exp` with `exp != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: Generator,
    pub exp: i64,
}

impl Syllable {
    pub fn new(gen: Generator, exp: i64) -> Self {
        Syllable { gen, exp }
    }
}

/// Image of a word under the abelianization F(x,y) -> Z ⊕ Z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AbelianImage {
    pub ex: i64,
    pub ey: i64,
}

impl AbelianImage {
    pub const ZERO: AbelianImage = AbelianImage { ex: 0, ey: 0 };

    pub fn new(ex: i64, ey: i64) -> Self {
        AbelianImage { ex, ey }
    }

    pub fn is_zero(&self) -> bool {
        self.ex == 0 && self.ey == 0
    }
}

impl Add for AbelianImage {
    type Output = AbelianImage;

    fn add(self, rhs: AbelianImage) -> AbelianImage {
        AbelianImage::new(self.ex + rhs.ex, self.ey + rhs.ey)
    }
}

impl fmt::Display for AbelianImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.ex, self.ey)
    }
}

/// A freely reduced word in F(x, y). The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    syllables: Vec<Syllable>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn gen(gen: Generator) -> Self {
        FreeWord { syllables: vec![Syllable::new(gen, 1)] }
    }

    pub fn x() -> Self {
        FreeWord::gen(Generator::X)
    }

    pub fn y() -> Self {
        FreeWord::gen(Generator::Y)
    }

    /// `gen^exp`, the identity when `exp == 0`.
    pub fn power_of(gen: Generator, exp: i64) -> Self {
        if exp == 0 {
            FreeWord::identity()
        } else {
            FreeWord { syllables: vec![Syllable::new(gen, exp)] }
        }
    }

    /// `x^a y^b`.
    pub fn xy_power(a: i64, b: i64) -> Self {
        let mut w = FreeWord::power_of(Generator::X, a);
        if b != 0 {
            w.syllables.push(Syllable::new(Generator::Y, b));
        }
        w
    }

    /// Builds a word from arbitrary syllables, reducing as it goes.
    pub fn from_syllables<I: IntoIterator<Item = Syllable>>(items: I) -> Result<Self> {
        let mut w = FreeWord::identity();
        for s in items {
            w.push(s)?;
        }
        Ok(w)
    }

    /// Accepts syllables only if they already form a reduced word.
    pub fn try_from_reduced(syllables: Vec<Syllable>) -> Result<Self> {
        if syllables.iter().any(|s| s.exp == 0 || s.exp == i64::MIN) {
            return Err(Error::Malformed("zero or out-of-range exponent".into()));
        }
        if syllables.windows(2).any(|p| p[0].gen == p[1].gen) {
            return Err(Error::Malformed("adjacent syllables share a generator".into()));
        }
        Ok(FreeWord { syllables })
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of absolute exponents.
    pub fn letter_len(&self) -> u128 {
        self.syllables.iter().map(|s| s.exp.unsigned_abs() as u128).sum()
    }

    /// Expands the word into single signed letters.
    pub fn letters(&self) -> impl Iterator<Item = (Generator, i8)> + '_ {
        self.syllables.iter().flat_map(|s| {
            let sign: i8 = if s.exp > 0 { 1 } else { -1 };
            std::iter::repeat_n((s.gen, sign), s.exp.unsigned_abs() as usize)
        })
    }

    fn push(&mut self, s: Syllable) -> Result<()> {
        if s.exp == 0 {
            return Ok(());
        }
        if s.exp == i64::MIN {
            return Err(Error::Overflow);
        }
        match self.syllables.last_mut() {
            Some(last) if last.gen == s.gen => {
                let e = error::add(last.exp, s.exp)?;
                if e == 0 {
                    self.syllables.pop();
                } else {
                    last.exp = e;
                }
            }
            _ => self.syllables.push(s),
        }
        Ok(())
    }

    /// The reduced product `self · other`.
    pub fn concat(&self, other: &FreeWord) -> Result<FreeWord> {
        let mut out = self.clone();
        for s in &other.syllables {
            out.push(*s)?;
        }
        Ok(out)
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord {
            syllables: self.syllables.iter().rev().map(|s| Syllable::new(s.gen, -s.exp)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Result<FreeWord> {
        if n == i64::MIN {
            return Err(Error::Overflow);
        }
        let mut base = if n < 0 { self.invert() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = FreeWord::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.concat(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.concat(&base)?;
            }
        }
        Ok(acc)
    }

    /// Conjugate `self · w · self⁻¹`.
    pub fn conjugate(&self, w: &FreeWord) -> Result<FreeWord> {
        self.concat(w)?.concat(&self.invert())
    }

    /// Applies the endomorphism `x ↦ image_of_x`, `y ↦ image_of_y`.
    pub fn substitute(&self, image_of_x: &FreeWord, image_of_y: &FreeWord) -> Result<FreeWord> {
        let mut out = FreeWord::identity();
        for s in &self.syllables {
            let img = match s.gen {
                Generator::X => image_of_x,
                Generator::Y => image_of_y,
            };
            out = out.concat(&img.pow(s.exp)?)?;
        }
        Ok(out)
    }

    /// Exponent sums. Panics if a sum leaves the i64 range.
    pub fn gamma(&self) -> AbelianImage {
        let mut img = AbelianImage::ZERO;
        for s in &self.syllables {
            let slot = match s.gen {
                Generator::X => &mut img.ex,
                Generator::Y => &mut img.ey,
            };
            *slot = slot.checked_add(s.exp).expect("exponent sum overflow");
        }
        img
    }

    /// The homomorphism ker γ → Z with `B ↦ 1`.
    ///
    /// Reading the word as a lattice path (x one step right, y one step up),
    /// this is minus the enclosed signed area, which equals the sum over
    /// x-syllables of `height * exponent`.
    pub fn epsilon(&self) -> Result<i64> {
        let g = self.gamma();
        if !g.is_zero() {
            return Err(Error::Unbalanced { ex: g.ex, ey: g.ey });
        }
        let mut height: i128 = 0;
        let mut acc: i128 = 0;
        for s in &self.syllables {
            match s.gen {
                Generator::X => acc += height * s.exp as i128,
                Generator::Y => height += s.exp as i128,
            }
        }
        i64::try_from(acc).map_err(|_| Error::Overflow)
    }
}

impl Mul for &FreeWord {
    type Output = FreeWord;

    /// Panics on exponent overflow; use [`FreeWord::concat`] to handle it.
    fn mul(self, rhs: &FreeWord) -> FreeWord {
        self.concat(rhs).expect("exponent overflow")
    }
}

impl Mul for FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: FreeWord) -> FreeWord {
        &self * &rhs
    }
}

/// `B = [x, y⁻¹] = x y⁻¹ x⁻¹ y`.
pub fn b_word() -> FreeWord {
    FreeWord {
        syllables: vec![
            Syllable::new(Generator::X, 1),
            Syllable::new(Generator::Y, -1),
            Syllable::new(Generator::X, -1),
            Syllable::new(Generator::Y, 1),
        ],
    }
}

/// `[a, b] = a b a⁻¹ b⁻¹`.
pub fn commutator(a: &FreeWord, b: &FreeWord) -> Result<FreeWord> {
    a.concat(b)?.concat(&a.invert())?.concat(&b.invert())
}

/// `W(n, d) = (x⁻ⁿ y)^d x^(nd) y⁻ᵈ`.
pub fn w_word(n: i64, d: i64) -> Result<FreeWord> {
    let step = FreeWord::xy_power(error::sub(0, n)?, 1);
    step.pow(d)?
        .concat(&FreeWord::power_of(Generator::X, error::mul(n, d)?))?
        .concat(&FreeWord::power_of(Generator::Y, error::sub(0, d)?))
}

/// `(B x⁻¹)ⁿ xⁿ`.
pub fn bxinv_pow(n: i64) -> Result<FreeWord> {
    let bx = b_word().concat(&FreeWord::power_of(Generator::X, -1))?;
    bx.pow(n)?.concat(&FreeWord::power_of(Generator::X, n))
}

/// The named words used throughout the classifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedWord {
    B,
    Commutator(FreeWord, FreeWord),
    W { n: i64, d: i64 },
    BxInvPow(i64),
}

pub fn named_word(tag: &NamedWord) -> Result<FreeWord> {
    match tag {
        NamedWord::B => Ok(b_word()),
        NamedWord::Commutator(a, b) => commutator(a, b),
        NamedWord::W { n, d } => w_word(*n, *d),
        NamedWord::BxInvPow(n) => bxinv_pow(*n),
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if s.exp == 1 {
                write!(f, "{}", s.gen.symbol())?;
            } else {
                write!(f, "{}^{}", s.gen.symbol(), s.exp)?;
            }
        }
        Ok(())
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    /// Whitespace-separated tokens `x`, `y`, `B`, each optionally `^<int>`,
    /// and `1` for the identity.
    fn from_str(s: &str) -> Result<FreeWord> {
        let mut out = FreeWord::identity();
        let mut seen = false;
        for tok in s.split_whitespace() {
            seen = true;
            if tok == "1" {
                continue;
            }
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => {
                    let e: i64 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in token `{tok}`")))?;
                    (b, e)
                }
                None => (tok, 1),
            };
            let piece = match base {
                "x" => FreeWord::power_of(Generator::X, exp),
                "y" => FreeWord::power_of(Generator::Y, exp),
                "B" => b_word().pow(exp)?,
                _ => return Err(Error::Parse(format!("unknown token `{tok}`"))),
            };
            out = out.concat(&piece)?;
        }
        if !seen {
            return Err(Error::Parse("empty word (write `1` for the identity)".into()));
        }
        Ok(out)
    }
}

impl Serialize for FreeWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FreeWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn free_cancellation() {
        assert_eq!(&w("x y") * &w("y^-1 x"), w("x^2"));
        assert_eq!(&w("x y") * &w("1"), w("x y"));
        assert_eq!((&w("x y") * &w("x")).syllables().len(), 3);
    }

    #[test]
    fn cascading_cancellation() {
        let a = w("x^2 y^3 x");
        assert!((&a * &a.invert()).is_identity());
        assert_eq!(&w("y x^2 y^3 x") * &w("x^-1 y^-3 x^-2"), w("y"));
    }

    #[test]
    fn invert_reverses_and_negates() {
        assert_eq!(w("x^2 y^-1").invert(), w("y x^-2"));
        assert_eq!(FreeWord::identity().invert(), FreeWord::identity());
    }

    #[test]
    fn overflow_is_an_error() {
        let big = FreeWord::power_of(Generator::X, i64::MAX);
        assert_eq!(big.concat(&FreeWord::x()), Err(Error::Overflow));
        assert_eq!(big.pow(2), Err(Error::Overflow));
        assert_eq!(
            FreeWord::power_of(Generator::X, -i64::MAX).concat(&FreeWord::power_of(Generator::X, -1)),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn substitution() {
        let bxinv = &b_word() * &w("x^-1");
        let byinv = &b_word() * &w("y^-1");
        assert_eq!(FreeWord::x().substitute(&bxinv, &byinv).unwrap(), bxinv);
        assert_eq!(FreeWord::y().substitute(&w("x"), &w("x^-1 y")).unwrap(), w("x^-1 y"));
        assert!(FreeWord::identity().substitute(&bxinv, &byinv).unwrap().is_identity());
        assert_eq!(w("y^-2").substitute(&w("x"), &w("x^-1 y")).unwrap(), w("y^-1 x y^-1 x"));
    }

    #[test]
    fn named_words() {
        assert_eq!(named_word(&NamedWord::B).unwrap(), w("x y^-1 x^-1 y"));
        let a = w("x y^2 x^-3");
        assert!(named_word(&NamedWord::Commutator(a.clone(), a)).unwrap().is_identity());
        assert_eq!(named_word(&NamedWord::W { n: 1, d: 1 }).unwrap(), w("x^-1 y x y^-1"));
        assert_eq!(bxinv_pow(1).unwrap(), b_word());
        assert!(bxinv_pow(0).unwrap().is_identity());
    }

    #[test]
    fn gamma_values() {
        assert_eq!(w("x^2 y^-3").gamma(), AbelianImage::new(2, -3));
        assert_eq!(b_word().gamma(), AbelianImage::ZERO);
    }

    #[test]
    fn epsilon_values() {
        assert_eq!(b_word().epsilon(), Ok(1));
        let c = commutator(&w("x^2"), &w("y^3")).unwrap();
        assert_eq!(c.epsilon(), Ok(-6));
        assert_eq!(bxinv_pow(5).unwrap().epsilon(), Ok(5));
        // Summing the steps of the lattice path directly: the x^{-n} runs sit
        // at heights 0..d-1 and the closing x^{nd} at height d, giving
        // n·d·(d+1)/2. For (n, d) = (2, 3) that is 12.
        assert_eq!(w_word(2, 3).unwrap().epsilon(), Ok(12));
        assert_eq!(w("x").epsilon(), Err(Error::Unbalanced { ex: 1, ey: 0 }));
    }

    #[test]
    fn text_round_trip() {
        for s in ["1", "x", "x^-3 y^2 x", "y^-1"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert_eq!(w("B"), b_word());
        assert_eq!(w("B^-1"), b_word().invert());
        assert_eq!(w("x x^-1"), FreeWord::identity());
        assert!("x^".parse::<FreeWord>().is_err());
        assert!("z".parse::<FreeWord>().is_err());
        assert!("".parse::<FreeWord>().is_err());
    }

    #[test]
    fn try_from_reduced_rejects_unreduced() {
        let bad = vec![Syllable::new(Generator::X, 1), Syllable::new(Generator::X, 2)];
        assert!(FreeWord::try_from_reduced(bad).is_err());
        assert!(FreeWord::try_from_reduced(vec![Syllable::new(Generator::Y, 0)]).is_err());
    }
}

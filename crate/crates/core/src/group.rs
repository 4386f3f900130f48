use crate::error::Result;

/// Minimal group interface shared by every model in the crate.
pub trait GroupElement: Clone + PartialEq + Sized {
    fn op(&self, other: &Self) -> Result<Self>;
    fn inverse(&self) -> Result<Self>;
    /// The identity of the group `self` lives in.
    fn identity_like(&self) -> Self;

    fn pow_z(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = self.identity_like();
        let mut sq = base;
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.op(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.op(&sq)?;
            }
        }
        Ok(acc)
    }

    fn conj_by(&self, g: &Self) -> Result<Self> {
        g.op(self)?.op(&g.inverse()?)
    }
}

/// A word in numbered generators: `(index, exponent)` pairs.
pub type GenWord = Vec<(usize, i64)>;

/// Evaluates `word` with generator `i` sent to `images[i]`.
pub fn eval_word<G: GroupElement>(identity: &G, images: &[G], word: &[(usize, i64)]) -> Result<G> {
    let mut acc = identity.clone();
    for &(i, e) in word {
        acc = acc.op(&images[i].pow_z(e)?)?;
    }
    Ok(acc)
}

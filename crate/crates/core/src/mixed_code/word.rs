use std::fmt;

use crate::{Error, Prime, Result};

/// The ambient space `Z_p^α × Z_{p²}^β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape {
    pub p: Prime,
    pub alpha: usize,
    pub beta: usize,
}

impl Shape {
    pub fn new(p: Prime, alpha: usize, beta: usize) -> Self {
        Shape { p, alpha, beta }
    }

    /// Number of coordinates `α + β`.
    pub fn len(&self) -> usize {
        self.alpha + self.beta
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Length `α + pβ` of a Gray image.
    pub fn gray_len(&self) -> usize {
        self.alpha + self.p.get() as usize * self.beta
    }

    /// Modulus of coordinate `i`.
    #[inline]
    pub fn modulus(&self, i: usize) -> u32 {
        if i < self.alpha {
            self.p.get()
        } else {
            self.p.square()
        }
    }

    pub(crate) fn check(&self, other: &Shape) -> Result<()> {
        if self != other {
            return Err(Error::ShapeMismatch(format!(
                "(p={}, α={}, β={}) vs (p={}, α={}, β={})",
                self.p, self.alpha, self.beta, other.p, other.alpha, other.beta
            )));
        }
        Ok(())
    }

    /// `a += k·b` on flat words of this shape.
    #[inline]
    pub(crate) fn add_scaled_into(&self, a: &mut [u32], b: &[u32], k: u32) {
        let q = self.p.get();
        let q2 = self.p.square();
        let (ax, ay) = a.split_at_mut(self.alpha);
        let (bx, by) = b.split_at(self.alpha);
        let kx = k % q;
        let ky = k % q2;
        for (x, &y) in ax.iter_mut().zip(bx) {
            *x = (*x + kx * y) % q;
        }
        for (x, &y) in ay.iter_mut().zip(by) {
            *x = (*x + ky * y) % q2;
        }
    }
}

/// A word `(x | y)` with `x ∈ Z_p^α` and `y ∈ Z_{p²}^β`.
///
/// Entries are stored flat: the first `α` are the X part, the rest the Y part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedWord {
    shape: Shape,
    entries: Vec<u32>,
}

impl MixedWord {
    pub fn new(p: Prime, x: &[u32], y: &[u32]) -> Result<Self> {
        let mut entries = Vec::with_capacity(x.len() + y.len());
        entries.extend_from_slice(x);
        entries.extend_from_slice(y);
        Self::from_entries(Shape::new(p, x.len(), y.len()), entries)
    }

    /// Builds a word from flat entries, rejecting non-canonical residues.
    pub fn from_entries(shape: Shape, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != shape.len() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} entries, got {}",
                shape.len(),
                entries.len()
            )));
        }
        for (i, &v) in entries.iter().enumerate() {
            let bound = shape.modulus(i);
            if v >= bound {
                return Err(Error::EntryOutOfRange {
                    position: i,
                    value: v,
                    bound,
                });
            }
        }
        Ok(MixedWord { shape, entries })
    }

    /// Builds a word from arbitrary integers, reducing each coordinate.
    pub fn reduced(shape: Shape, values: &[i64]) -> Result<Self> {
        if values.len() != shape.len() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} entries, got {}",
                shape.len(),
                values.len()
            )));
        }
        let entries = values
            .iter()
            .enumerate()
            .map(|(i, &v)| v.rem_euclid(shape.modulus(i) as i64) as u32)
            .collect();
        Ok(MixedWord { shape, entries })
    }

    pub(crate) fn from_raw(shape: Shape, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), shape.len());
        MixedWord { shape, entries }
    }

    pub fn zero(shape: Shape) -> Self {
        MixedWord {
            shape,
            entries: vec![0; shape.len()],
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn prime(&self) -> Prime {
        self.shape.p
    }

    pub fn x(&self) -> &[u32] {
        &self.entries[..self.shape.alpha]
    }

    pub fn y(&self) -> &[u32] {
        &self.entries[self.shape.alpha..]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn checked_add(&self, other: &MixedWord) -> Result<MixedWord> {
        self.shape.check(&other.shape)?;
        let mut out = self.entries.clone();
        self.shape.add_scaled_into(&mut out, &other.entries, 1);
        Ok(MixedWord::from_raw(self.shape, out))
    }

    pub fn checked_sub(&self, other: &MixedWord) -> Result<MixedWord> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> MixedWord {
        self.scale(-1)
    }

    /// `a·u`, reducing X entries mod `p` and Y entries mod `p²`.
    pub fn scale(&self, a: i64) -> MixedWord {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let m = self.shape.modulus(i) as i64;
                ((a.rem_euclid(m) * e as i64) % m) as u32
            })
            .collect();
        MixedWord::from_raw(self.shape, entries)
    }

    /// Componentwise product `u ∗ v`.
    pub fn star(&self, other: &MixedWord) -> Result<MixedWord> {
        self.shape.check(&other.shape)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .enumerate()
            .map(|(i, (&a, &b))| a * b % self.shape.modulus(i))
            .collect();
        Ok(MixedWord::from_raw(self.shape, entries))
    }

    /// Additive order: 1, `p` or `p²`.
    pub fn order(&self) -> u32 {
        let q = self.shape.p.get();
        if self.is_zero() {
            1
        } else if self.y().iter().all(|&e| e % q == 0) {
            q
        } else {
            q * q
        }
    }

    /// `p⟨x₁,x₂⟩ + ⟨y₁,y₂⟩ ∈ Z_{p²}`.
    pub fn inner_product(&self, other: &MixedWord) -> Result<u32> {
        self.shape.check(&other.shape)?;
        let q = self.shape.p.get() as u64;
        let x: u64 = self
            .x()
            .iter()
            .zip(other.x())
            .map(|(&a, &b)| a as u64 * b as u64)
            .sum::<u64>()
            % q;
        let y: u64 = self
            .y()
            .iter()
            .zip(other.y())
            .map(|(&a, &b)| a as u64 * b as u64)
            .sum();
        Ok(((q * x + y) % (q * q)) as u32)
    }

    /// Reorders coordinates: new X position `i` takes old X position
    /// `x_perm[i]`, and likewise for Y.
    pub fn permuted(&self, x_perm: &[usize], y_perm: &[usize]) -> MixedWord {
        let x = self.x();
        let y = self.y();
        let entries = x_perm
            .iter()
            .map(|&i| x[i])
            .chain(y_perm.iter().map(|&i| y[i]))
            .collect();
        MixedWord::from_raw(self.shape, entries)
    }

    /// Parses the literal `"x1,x2,...|y1,y2,..."`. Either side may be empty.
    pub fn parse(p: Prime, literal: &str) -> Result<MixedWord> {
        let (xs, ys) = literal
            .split_once('|')
            .ok_or_else(|| Error::Malformed(format!("word literal {literal:?} has no '|'")))?;
        let parse_side = |s: &str| -> Result<Vec<u32>> {
            let s = s.trim();
            if s.is_empty() {
                return Ok(Vec::new());
            }
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Malformed(format!("bad entry {t:?} in {literal:?}")))
                })
                .collect()
        };
        MixedWord::new(p, &parse_side(xs)?, &parse_side(ys)?)
    }
}

impl fmt::Display for MixedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| {
            v.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}|{}", join(self.x()), join(self.y()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Prime {
        Prime::new(3).unwrap()
    }

    fn w(s: &str) -> MixedWord {
        MixedWord::parse(p3(), s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(w("1|4").checked_add(&w("2|7")).unwrap(), w("0|2"));
        assert_eq!(w("2|4").scale(3), w("0|3"));
        assert_eq!(w("1|4").star(&w("2|5")).unwrap(), w("2|2"));
        assert_eq!(w("1|4").checked_sub(&w("1|4")).unwrap(), w("0|0"));
    }

    #[test]
    fn orders() {
        assert_eq!(w("0|0").order(), 1);
        assert_eq!(w("1|0").order(), 3);
        assert_eq!(w("0|1").order(), 9);
        assert_eq!(w("0|6").order(), 3);
    }

    #[test]
    fn inner_products() {
        assert_eq!(w("1|2").inner_product(&w("2|5")).unwrap(), 7);
        assert_eq!(w("1|2").inner_product(&w("0|0")).unwrap(), 0);
        assert_eq!(w("1,2|").inner_product(&w("2,2|")).unwrap(), 0);
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        assert!(matches!(
            w("1|2").checked_add(&w("1,1|2")),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(matches!(
            w("1|2").inner_product(&w("|2,2")),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn literal_parsing() {
        let v = w("2|4,0");
        assert_eq!(v.x(), &[2]);
        assert_eq!(v.y(), &[4, 0]);
        assert_eq!(v.to_string(), "2|4,0");
        assert_eq!(w("|3").x(), &[] as &[u32]);
        assert!(MixedWord::parse(p3(), "3|0").is_err());
        assert!(MixedWord::parse(p3(), "0|9").is_err());
        assert!(MixedWord::parse(p3(), "0,0").is_err());
    }

    #[test]
    fn times_p_drops_order() {
        let v = w("1,2|4,5");
        assert_eq!(v.order(), 9);
        assert_eq!(v.scale(3).order(), 3);
    }
}

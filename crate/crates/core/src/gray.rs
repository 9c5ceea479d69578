//! The Gray map `φ : Z_{p²} → Z_p^p`, its coordinatewise extension `Φ`, the
//! homogeneous weight, and the carry words.
//!
//! `φ(θ) = θ''·(1, …, 1) + θ'·(0, 1, …, p−1)` where `θ = θ''p + θ'`. The map
//! is not additive; the defect is measured by the carry word `P(u, v)`:
//!
//! ```text
//! Φ(u + v) = Φ(u) + Φ(v) + Φ(p·P(u, v))
//! ```

use crate::mixed_code::{MixedWord, Shape};
use crate::{Error, Prime, Result};

/// `φ(θ)`: entry `i` is `θ'' + θ'·i (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrayBlock(Vec<u32>);

impl GrayBlock {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

/// A vector over `Z_p` of length `α + pβ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrayWord {
    p: Prime,
    entries: Vec<u32>,
}

impl GrayWord {
    pub fn new(p: Prime, entries: Vec<u32>) -> Result<Self> {
        if let Some((i, &v)) = entries.iter().enumerate().find(|(_, &v)| v >= p.get()) {
            return Err(Error::EntryOutOfRange {
                position: i,
                value: v,
                bound: p.get(),
            });
        }
        Ok(GrayWord { p, entries })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn hamming_weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    /// Entrywise sum modulo `p`.
    pub fn checked_add(&self, other: &GrayWord) -> Result<GrayWord> {
        if self.p != other.p || self.len() != other.len() {
            return Err(Error::ShapeMismatch(format!(
                "Gray words of length {} and {}",
                self.len(),
                other.len()
            )));
        }
        let q = self.p.get();
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a + b) % q)
            .collect();
        Ok(GrayWord { p: self.p, entries })
    }

    pub fn scale(&self, k: u32) -> GrayWord {
        let q = self.p.get();
        let k = k % q;
        GrayWord {
            p: self.p,
            entries: self.entries.iter().map(|e| e * k % q).collect(),
        }
    }
}

impl std::fmt::Display for GrayWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(u32::to_string).collect();
        f.write_str(&cells.join(","))
    }
}

pub fn phi(p: Prime, theta: u32) -> GrayBlock {
    let mut out = vec![0; p.get() as usize];
    phi_into(p, theta, &mut out);
    GrayBlock(out)
}

#[inline]
pub(crate) fn phi_into(p: Prime, theta: u32, out: &mut [u32]) {
    let q = p.get();
    let (lo, hi) = p.digits(theta);
    let mut v = hi;
    for e in out.iter_mut() {
        *e = v;
        v += lo;
        if v >= q {
            v -= q;
        }
    }
}

/// Recovers `θ` from a block `θ''·1 + θ'·(0, 1, …, p−1)`.
pub fn phi_inverse(p: Prime, block: &[u32]) -> Result<u32> {
    let q = p.get();
    if block.len() != q as usize || block.iter().any(|&b| b >= q) {
        return Err(Error::NotGrayImage(format!("{block:?}")));
    }
    let hi = block[0];
    let lo = if q > 1 {
        (block[1] + q - block[0]) % q
    } else {
        0
    };
    let theta = hi * q + lo;
    let mut expect = vec![0; block.len()];
    phi_into(p, theta, &mut expect);
    if expect != block {
        return Err(Error::NotGrayImage(format!("{block:?}")));
    }
    Ok(theta)
}

/// `Φ(x | y) = (x, φ(y₁), …, φ(y_β))`.
pub fn big_phi(w: &MixedWord) -> GrayWord {
    let shape = w.shape();
    let mut entries = vec![0; shape.gray_len()];
    big_phi_into(shape, w.entries(), &mut entries);
    GrayWord {
        p: shape.p,
        entries,
    }
}

/// `Φ` on flat entries, writing `α + pβ` values into `out`.
#[inline]
pub(crate) fn big_phi_into(shape: Shape, entries: &[u32], out: &mut [u32]) {
    let a = shape.alpha;
    let q = shape.p.get() as usize;
    out[..a].copy_from_slice(&entries[..a]);
    for (j, &y) in entries[a..].iter().enumerate() {
        let at = a + j * q;
        phi_into(shape.p, y, &mut out[at..at + q]);
    }
}

pub fn big_phi_inverse(g: &GrayWord, alpha: usize, beta: usize) -> Result<MixedWord> {
    let p = g.p;
    let shape = Shape::new(p, alpha, beta);
    if g.len() != shape.gray_len() {
        return Err(Error::ShapeMismatch(format!(
            "Gray word of length {} for α={alpha}, β={beta}",
            g.len()
        )));
    }
    let q = p.get() as usize;
    let mut entries = g.entries[..alpha].to_vec();
    for block in g.entries[alpha..].chunks(q) {
        entries.push(phi_inverse(p, block)?);
    }
    MixedWord::from_entries(shape, entries)
}

/// `0` on zero, `p` on nonzero multiples of `p`, `p − 1` on units.
pub fn hom_weight(p: Prime, theta: u32) -> u32 {
    let theta = theta % p.square();
    if theta == 0 {
        0
    } else if theta.is_multiple_of(p.get()) {
        p.get()
    } else {
        p.get() - 1
    }
}

/// Homogeneous distance between two vectors over `Z_{p²}`.
pub fn hom_distance(p: Prime, a: &[u32], b: &[u32]) -> Result<u32> {
    if a.len() != b.len() {
        return Err(Error::ShapeMismatch(format!(
            "vectors of length {} and {}",
            a.len(),
            b.len()
        )));
    }
    let q2 = p.square();
    Ok(a.iter()
        .zip(b)
        .map(|(&x, &y)| hom_weight(p, (x % q2 + q2 - y % q2) % q2))
        .sum())
}

/// Hamming weight of `Φ(w)`: Hamming weight of X plus homogeneous weight of Y.
pub fn gray_weight(w: &MixedWord) -> u32 {
    let p = w.prime();
    let x = w.x().iter().filter(|&&e| e != 0).count() as u32;
    x + w.y().iter().map(|&e| hom_weight(p, e)).sum::<u32>()
}

/// `P(u, v)`: zero on X; on Y, 1 where `u'ᵢ + v'ᵢ ≥ p`.
pub fn carry(u: &MixedWord, v: &MixedWord) -> Result<MixedWord> {
    u.shape().check(&v.shape())?;
    let shape = u.shape();
    let mut out = vec![0; shape.len()];
    carry_into(shape, u.entries(), v.entries(), 1, &mut out);
    Ok(MixedWord::from_raw(shape, out))
}

/// `pP'(u, v)`: zero on X; on Y, `p(p−1)` where `P` is 1.
pub fn p_carry_prime(u: &MixedWord, v: &MixedWord) -> Result<MixedWord> {
    u.shape().check(&v.shape())?;
    let shape = u.shape();
    let q = shape.p.get();
    let mut out = vec![0; shape.len()];
    carry_into(shape, u.entries(), v.entries(), q * (q - 1), &mut out);
    Ok(MixedWord::from_raw(shape, out))
}

/// Writes `value·P(u, v)` into `out` (X part zero).
#[inline]
pub(crate) fn carry_into(shape: Shape, u: &[u32], v: &[u32], value: u32, out: &mut [u32]) {
    let a = shape.alpha;
    let q = shape.p.get();
    out[..a].fill(0);
    for ((o, &x), &y) in out[a..].iter_mut().zip(&u[a..]).zip(&v[a..]) {
        *o = if x % q + y % q >= q { value } else { 0 };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn prime(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    fn word(p: u32, s: &str) -> MixedWord {
        MixedWord::parse(prime(p), s).unwrap()
    }

    fn random_word(rng: &mut impl Rng, shape: Shape) -> MixedWord {
        let e = (0..shape.len())
            .map(|i| rng.gen_range(0..shape.modulus(i)))
            .collect();
        MixedWord::from_entries(shape, e).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(prime(3), 0).entries(), &[0, 0, 0]);
        assert_eq!(phi(prime(3), 7).entries(), &[2, 0, 1]);
        assert_eq!(phi(prime(5), 6).entries(), &[1, 2, 3, 4, 0]);
    }

    #[test]
    fn phi_inverse_examples() {
        let p = prime(3);
        assert_eq!(phi_inverse(p, &[1, 1, 1]).unwrap(), 3);
        assert_eq!(phi_inverse(p, &[0, 1, 2]).unwrap(), 1);
        assert!(matches!(
            phi_inverse(p, &[0, 1, 1]),
            Err(Error::NotGrayImage(_))
        ));
        for p in [3, 5, 7] {
            let p = prime(p);
            for t in 0..p.square() {
                assert_eq!(phi_inverse(p, phi(p, t).entries()).unwrap(), t);
            }
        }
    }

    #[test]
    fn big_phi_examples() {
        let g = big_phi(&word(3, "2|4,0"));
        assert_eq!(g.entries(), &[2, 1, 2, 0, 0, 0, 0]);
        assert_eq!(big_phi_inverse(&g, 1, 2).unwrap(), word(3, "2|4,0"));
        let g = big_phi(&word(3, "|3"));
        assert_eq!(g.entries(), &[1, 1, 1]);
        assert_eq!(big_phi_inverse(&g, 0, 1).unwrap(), word(3, "|3"));
        let z = MixedWord::zero(Shape::new(prime(5), 2, 3));
        assert_eq!(big_phi(&z).hamming_weight(), 0);
        assert_eq!(big_phi_inverse(&big_phi(&z), 2, 3).unwrap(), z);
        let bad = GrayWord::new(prime(3), vec![0, 1, 1]).unwrap();
        assert!(matches!(
            big_phi_inverse(&bad, 0, 1),
            Err(Error::NotGrayImage(_))
        ));
    }

    #[test]
    fn weights() {
        let p = prime(3);
        assert_eq!(hom_weight(p, 6), 3);
        assert_eq!(hom_weight(p, 7), 2);
        assert_eq!(hom_weight(p, 0), 0);
        assert_eq!(hom_distance(p, &[4], &[1]).unwrap(), 3);
        assert_eq!(hom_distance(p, &[4, 0], &[1, 8]).unwrap(), 5);
        assert_eq!(hom_distance(p, &[4, 0], &[4, 0]).unwrap(), 0);
        assert!(hom_distance(p, &[4], &[4, 0]).is_err());
    }

    #[test]
    fn carry_examples() {
        let c = |u: &str, v: &str| carry(&word(3, u), &word(3, v)).unwrap();
        assert_eq!(c("|5", "|5"), word(3, "|1"));
        assert_eq!(c("|4", "|5"), word(3, "|1"));
        for v in 0..9 {
            assert_eq!(c("|3", &format!("|{v}")), word(3, "|0"));
        }
        let pc = |p, u: &str, v: &str| p_carry_prime(&word(p, u), &word(p, v)).unwrap();
        assert_eq!(pc(3, "|5", "|5"), word(3, "|6"));
        assert_eq!(pc(5, "|4", "|4"), word(5, "|20"));
        assert_eq!(pc(5, "1|1", "2|1"), word(5, "0|0"));
        assert!(carry(&word(3, "|1"), &word(3, "1|1")).is_err());
    }

    #[test]
    fn isometry_exhaustive() {
        for p in [3, 5] {
            let p = prime(p);
            for a in 0..p.square() {
                for b in 0..p.square() {
                    let ham = phi(p, a)
                        .entries()
                        .iter()
                        .zip(phi(p, b).entries())
                        .filter(|(x, y)| x != y)
                        .count() as u32;
                    assert_eq!(hom_distance(p, &[a], &[b]).unwrap(), ham);
                }
            }
        }
    }

    #[test]
    fn additivity_random_pairs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for p in [3, 5, 7] {
            let p = prime(p);
            for _ in 0..1000 {
                let shape = Shape::new(p, rng.gen_range(0..=4), rng.gen_range(1..=4));
                let u = random_word(&mut rng, shape);
                let v = random_word(&mut rng, shape);
                let pp = carry(&u, &v).unwrap().scale(p.get() as i64);
                let lhs = big_phi(&u.checked_add(&v).unwrap());
                let rhs = big_phi(&u)
                    .checked_add(&big_phi(&v))
                    .unwrap()
                    .checked_add(&big_phi(&pp))
                    .unwrap();
                assert_eq!(lhs, rhs);
                let pcp = p_carry_prime(&u, &v).unwrap();
                assert_eq!(big_phi(&pp), big_phi(&pcp).scale(p.get() - 1));
            }
        }
    }

    #[test]
    fn cubic_identity_p3() {
        let p = prime(3);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let shape = Shape::new(p, rng.gen_range(0..=3), rng.gen_range(1..=4));
            let u = random_word(&mut rng, shape);
            let v = random_word(&mut rng, shape);
            let uv = u.star(&v).unwrap();
            let uuv = u.star(&uv).unwrap();
            let uvv = uv.star(&v).unwrap();
            let sum = uv.checked_add(&uuv).unwrap().checked_add(&uvv).unwrap();
            let mut t = sum.scale(3).into_entries();
            t[..shape.alpha].fill(0);
            let t = MixedWord::from_entries(shape, t).unwrap();
            let lhs = big_phi(&u.checked_add(&v).unwrap());
            let rhs = big_phi(&u)
                .checked_add(&big_phi(&v))
                .unwrap()
                .checked_add(&big_phi(&t).scale(2))
                .unwrap();
            assert_eq!(lhs, rhs);
            // the polynomial form agrees with the carry indicator
            assert_eq!(t, p_carry_prime(&u, &v).unwrap());
        }
    }

    proptest! {
        #[test]
        fn big_phi_is_injective(
            p in prop::sample::select(vec![3u32, 5, 7]),
            a in prop::collection::vec(0u32..49, 0..4),
            b in prop::collection::vec(0u32..49, 0..4),
        ) {
            let p = prime(p);
            let q2 = p.square();
            let a: Vec<u32> = a.iter().map(|x| x % q2).collect();
            let b: Vec<u32> = b.iter().map(|x| x % q2).take(a.len()).collect();
            prop_assume!(a.len() == b.len());
            let shape = Shape::new(p, 0, a.len());
            let wa = MixedWord::from_entries(shape, a.clone()).unwrap();
            let wb = MixedWord::from_entries(shape, b.clone()).unwrap();
            prop_assert_eq!(big_phi(&wa) == big_phi(&wb), a == b);
            prop_assert_eq!(gray_weight(&wa) as usize, big_phi(&wa).hamming_weight());
        }
    }
}

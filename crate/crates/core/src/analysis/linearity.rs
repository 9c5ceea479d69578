use crate::analysis::{combination, for_each_tuple, GrayImages};
use crate::gray::{carry_into, gray_weight};
use crate::mixed_code::{AdditiveCode, EnumerationCap, MixedWord};
use crate::{Error, Result};

/// `Φ(𝒞)` is linear iff `pP'(u, v) ∈ 𝒞` for all `u, v ∈ 𝒞`.
///
/// The carry depends only on the low digits of the Y entries, so it is
/// enough to range over the `p^δ` combinations `Σ bⱼvⱼ`, `b ∈ [0, p)^δ`.
/// Needs `p^δ ≤ cap`.
pub fn is_gray_linear(code: &AdditiveCode, cap: EnumerationCap) -> Result<bool> {
    let shape = code.shape();
    let p = shape.p;
    let q = p.get();
    let d = code.code_type().delta;
    let count = p.pow(d).unwrap_or(u128::MAX);
    if count > cap.0 {
        return Err(Error::CapExceeded {
            required: count,
            cap: cap.0,
        });
    }
    let mut reps = Vec::with_capacity(count as usize);
    for_each_tuple(q, d, |b| reps.push(combination(code, b)));
    let mut buf = vec![0u32; shape.len()];
    for (i, u) in reps.iter().enumerate() {
        for v in &reps[i..] {
            carry_into(shape, u, v, q * (q - 1), &mut buf);
            if !code.contains_in_place(&mut buf) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Closure of the enumerated Gray image under addition. Quadratic in `|𝒞|`.
pub fn is_gray_linear_bruteforce(code: &AdditiveCode, cap: EnumerationCap) -> Result<bool> {
    let q = code.prime().get();
    let images = GrayImages::new(code, cap)?;
    let mut sum = vec![0u32; images.width];
    for x in images.iter() {
        for y in images.iter() {
            for ((s, &a), &b) in sum.iter_mut().zip(x).zip(y) {
                *s = (a + b) % q;
            }
            if !images.index.contains(&sum) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Minimum Hamming weight of a nonzero Gray image; `None` for `{0}`.
pub fn min_hamming_distance(code: &AdditiveCode, cap: EnumerationCap) -> Result<Option<u32>> {
    let shape = code.shape();
    let mut best: Option<u32> = None;
    code.for_each_codeword(cap, |w| {
        if w.iter().any(|&e| e != 0) {
            let wt = gray_weight(&MixedWord::from_raw(shape, w.to_vec()));
            best = Some(best.map_or(wt, |b| b.min(wt)));
        }
    })?;
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{GeneratorMatrix, Prime};

    fn code(p: u32, alpha: usize, beta: usize, rows: &[Vec<u32>]) -> AdditiveCode {
        let p = Prime::new(p).unwrap();
        AdditiveCode::new(GeneratorMatrix::from_rows(p, alpha, beta, rows).unwrap())
    }

    const CAP: EnumerationCap = EnumerationCap::DEFAULT;

    #[test]
    fn linearity_examples() {
        let whole = code(3, 0, 1, &[vec![1]]);
        assert!(is_gray_linear(&whole, CAP).unwrap());
        assert!(is_gray_linear_bruteforce(&whole, CAP).unwrap());
        let order_p = code(5, 2, 1, &[vec![1, 2, 5]]);
        assert!(is_gray_linear(&order_p, CAP).unwrap());
        let twisted = code(3, 0, 2, &[vec![1, 2]]);
        assert_eq!(
            is_gray_linear(&twisted, CAP).unwrap(),
            is_gray_linear_bruteforce(&twisted, CAP).unwrap()
        );
        assert!(!is_gray_linear(&twisted, CAP).unwrap());
    }

    #[test]
    fn distances() {
        let full = code(3, 1, 1, &[vec![1, 0], vec![0, 1]]);
        assert_eq!(min_hamming_distance(&full, CAP).unwrap(), Some(1));
        assert_eq!(
            min_hamming_distance(&code(3, 0, 1, &[vec![3]]), CAP).unwrap(),
            Some(3)
        );
        assert_eq!(
            min_hamming_distance(&code(3, 0, 1, &[vec![1]]), CAP).unwrap(),
            Some(2)
        );
    }
}

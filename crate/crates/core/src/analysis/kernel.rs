//! Kernel `K(C) = {x ∈ Φ(𝒞) : x + Φ(𝒞) = Φ(𝒞)}`.
//!
//! The coset method tests the `p^δ` representatives `w_a = Σ aⱼvⱼ`,
//! `a ∈ [0, p)^δ`. It relies on these facts:
//!
//! * Order-`p` codewords have Y entries with zero low digit, so they never
//!   carry under `Φ` and their images always lie in `K(C)`.
//! * `K(C)` is a group, so `a ↦ [Φ(w_a) ∈ K(C)]` accepts a subgroup `S` of
//!   `Z_p^δ`: a lift of a sum mod `p` differs from the sum by an order-`p`
//!   word, which does not change kernel membership.
//! * `Φ(w) + Φ(c) ∈ Φ(𝒞)` holds iff `pP(w, c) ∈ 𝒞`, and `P(w, c)` depends on
//!   `c` only through `c mod p` on Y, i.e. through the coefficients of the
//!   `vⱼ` reduced mod `p`. So "for all `c ∈ 𝒞`" reduces exactly to the
//!   `p^δ` representatives `w_b`.
//!
//! Hence `ker = γ + δ + log_p |S|`.

use crate::analysis::{combination, for_each_tuple, gray_preimage, GrayImages};
use crate::gray::{big_phi_into, carry_into};
use crate::keyset::KeySet;
use crate::linalg::Echelon;
use crate::mixed_code::{AdditiveCode, EnumerationCap, MixedWord};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelMethod {
    /// Test each representative `w_a` against every residue class of `𝒞`.
    Coset,
    /// Translate-closure test over the full Gray image.
    BruteForce,
}

impl KernelMethod {
    pub fn name(self) -> &'static str {
        match self {
            KernelMethod::Coset => "coset",
            KernelMethod::BruteForce => "brute-force",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub kernel_dim: usize,
    /// `γ + 2δ − kernel_dim`.
    pub k_bar: usize,
    /// A reduced basis of `S = {a ∈ Z_p^δ : Φ(Σ aⱼvⱼ) ∈ K(C)}`.
    pub coset_exponents: Vec<Vec<u32>>,
    /// `|S| = p^(δ − k̄)`.
    pub coset_exponent_count: u128,
    pub method: KernelMethod,
}

struct Representatives {
    /// `w_b` for every `b ∈ [0, p)^δ`, flat.
    words: Vec<Vec<u32>>,
    grays: Vec<Vec<u32>>,
    coeffs: Vec<Vec<u32>>,
}

fn representatives(code: &AdditiveCode, cap: EnumerationCap) -> Result<Representatives> {
    let shape = code.shape();
    let p = shape.p;
    let d = code.code_type().delta;
    let count = p.pow(d).unwrap_or(u128::MAX);
    if count > cap.0 {
        return Err(Error::CapExceeded {
            required: count,
            cap: cap.0,
        });
    }
    let mut words = Vec::with_capacity(count as usize);
    let mut grays = Vec::with_capacity(count as usize);
    let mut coeffs = Vec::with_capacity(count as usize);
    for_each_tuple(p.get(), d, |b| {
        let w = combination(code, b);
        let mut g = vec![0; shape.gray_len()];
        big_phi_into(shape, &w, &mut g);
        words.push(w);
        grays.push(g);
        coeffs.push(b.to_vec());
    });
    Ok(Representatives {
        words,
        grays,
        coeffs,
    })
}

fn accepted_to_report(
    code: &AdditiveCode,
    accepted: &[Vec<u32>],
    method: KernelMethod,
) -> Result<KernelReport> {
    let t = code.code_type();
    let p = code.prime();
    let mut e = Echelon::new(p, t.delta);
    for a in accepted {
        e.insert(a);
    }
    if p.pow(e.rank()) != Some(accepted.len() as u128) {
        return Err(Error::Inconsistent(format!(
            "accepted coefficient set has {} elements, not a subgroup of rank {}",
            accepted.len(),
            e.rank()
        )));
    }
    let kernel_dim = t.gamma + t.delta + e.rank();
    Ok(KernelReport {
        kernel_dim,
        k_bar: t.log_size() - kernel_dim,
        coset_exponents: e.rows().to_vec(),
        coset_exponent_count: accepted.len() as u128,
        method,
    })
}

/// Coset method with the definitional test: `Φ(w_a) + Φ(w_b)` must be the
/// Gray image of a codeword for every residue class `b`.
///
/// Needs `p^δ ≤ cap`.
pub fn kernel_coset(code: &AdditiveCode, cap: EnumerationCap) -> Result<KernelReport> {
    let shape = code.shape();
    let q = shape.p.get();
    let reps = representatives(code, cap)?;
    let mut sum = vec![0u32; shape.gray_len()];
    let mut pre = vec![0u32; shape.len()];
    let mut accepted = Vec::new();
    for (ga, a) in reps.grays.iter().zip(&reps.coeffs) {
        let ok = reps.grays.iter().all(|gb| {
            for ((s, &x), &y) in sum.iter_mut().zip(ga).zip(gb) {
                *s = (x + y) % q;
            }
            gray_preimage(shape, &sum, &mut pre) && code.contains_in_place(&mut pre)
        });
        if ok {
            accepted.push(a.clone());
        }
    }
    accepted_to_report(code, &accepted, KernelMethod::Coset)
}

/// Coset method with the carry test: `pP'(w_a, w_b) ∈ 𝒞` for every `b`.
pub fn kernel_coset_via_carries(code: &AdditiveCode, cap: EnumerationCap) -> Result<KernelReport> {
    let shape = code.shape();
    let q = shape.p.get();
    let reps = representatives(code, cap)?;
    let mut buf = vec![0u32; shape.len()];
    let mut accepted = Vec::new();
    for (wa, a) in reps.words.iter().zip(&reps.coeffs) {
        let ok = reps.words.iter().all(|wb| {
            carry_into(shape, wa, wb, q * (q - 1), &mut buf);
            code.contains_in_place(&mut buf)
        });
        if ok {
            accepted.push(a.clone());
        }
    }
    accepted_to_report(code, &accepted, KernelMethod::Coset)
}

fn translates_into(images: &GrayImages, x: &[u32], q: u32, sum: &mut [u32]) -> bool {
    images.iter().all(|y| {
        for ((s, &a), &b) in sum.iter_mut().zip(x).zip(y) {
            *s = (a + b) % q;
        }
        images.index.contains(sum)
    })
}

/// Brute-force oracle on the enumerated Gray image.
///
/// Uses only that `K(C)` is a subgroup of `Z_p^n` (so members of its span
/// are members, and a non-member shifted by a member stays a non-member);
/// every other decision is a full translate test.
pub fn kernel_bruteforce(code: &AdditiveCode, cap: EnumerationCap) -> Result<KernelReport> {
    let shape = code.shape();
    let p = shape.p;
    let q = p.get();
    let images = GrayImages::new(code, cap)?;
    let width = images.width;
    let mut basis = Echelon::new(p, width);
    let mut bad: Vec<Vec<u32>> = Vec::new();
    let mut bad_index = KeySet::new(q, width);
    let mut sum = vec![0u32; width];
    for x in images.iter() {
        let r = basis.reduce(x);
        if r.iter().all(|&e| e == 0) || bad_index.contains(&r) {
            continue;
        }
        if translates_into(&images, x, q, &mut sum) {
            basis.insert(x);
            bad_index.clear();
            for b in &mut bad {
                basis.reduce_in_place(b);
                bad_index.insert(b);
            }
        } else {
            bad_index.insert(&r);
            bad.push(r);
        }
    }
    let t = code.code_type();
    // S from the kernel basis: which representatives land in K(C)
    let mut accepted = Vec::new();
    let mut g = vec![0u32; width];
    for_each_tuple(q, t.delta, |a| {
        big_phi_into(shape, &combination(code, a), &mut g);
        if basis.contains(&g) {
            accepted.push(a.to_vec());
        }
    });
    let report = accepted_to_report(code, &accepted, KernelMethod::BruteForce)?;
    if report.kernel_dim != basis.rank() {
        return Err(Error::Inconsistent(format!(
            "kernel basis has rank {} but representatives give {}",
            basis.rank(),
            report.kernel_dim
        )));
    }
    Ok(report)
}

/// `K(C)` by testing every codeword's full translate, with no shortcuts.
/// Quadratic in `|𝒞|`; meant for small codes.
pub fn kernel_set_exhaustive(code: &AdditiveCode, cap: EnumerationCap) -> Result<Vec<Vec<u32>>> {
    let q = code.prime().get();
    let images = GrayImages::new(code, cap)?;
    let mut sum = vec![0u32; images.width];
    Ok(images
        .iter()
        .filter(|x| translates_into(&images, x, q, &mut sum))
        .map(<[u32]>::to_vec)
        .collect())
}

pub fn kernel(
    code: &AdditiveCode,
    method: KernelMethod,
    cap: EnumerationCap,
) -> Result<KernelReport> {
    match method {
        KernelMethod::Coset => kernel_coset(code, cap),
        KernelMethod::BruteForce => kernel_bruteforce(code, cap),
    }
}

/// `Φ⁻¹(K(C))`, generated by the `uᵢ`, the `p·vⱼ` and `w_a` for `a` in the
/// basis of `S`. Its type is `(α, β; γ + k̄, δ − k̄; κ)`.
pub fn kernel_code(code: &AdditiveCode, report: &KernelReport) -> Result<AdditiveCode> {
    let shape = code.shape();
    let g = code.generators();
    let q = shape.p.get() as i64;
    let mut rows: Vec<MixedWord> = g.order_p_rows().to_vec();
    rows.extend(g.order_p2_rows().iter().map(|v| v.scale(q)));
    for a in &report.coset_exponents {
        rows.push(MixedWord::from_entries(shape, combination(code, a))?);
    }
    AdditiveCode::from_spanning_set(shape, &rows)
}

/// Checks that the translates `K(C) + Φ(w_t)`, `t` over a transversal of `S`
/// in `Z_p^δ`, are pairwise disjoint and cover `Φ(𝒞)` exactly.
pub fn coset_decomposition_check(
    code: &AdditiveCode,
    report: &KernelReport,
    cap: EnumerationCap,
) -> Result<bool> {
    let shape = code.shape();
    let p = shape.p;
    let q = p.get();
    let d = code.code_type().delta;
    let images = GrayImages::new(code, cap)?;
    let kernel = kernel_code(code, report)?;
    let kernel_images = GrayImages::new(&kernel, cap)?;

    // complete the basis of S with unit vectors; their span is a transversal
    let mut s = Echelon::new(p, d);
    for a in &report.coset_exponents {
        s.insert(a);
    }
    let mut complement = Vec::new();
    for j in 0..d {
        let mut h = vec![0u32; d];
        h[j] = 1;
        if s.insert(&h) {
            complement.push(h);
        }
    }
    let mut transversal = Vec::new();
    for_each_tuple(q, complement.len(), |c| {
        let mut t = vec![0u32; d];
        for (h, &k) in complement.iter().zip(c) {
            for (x, &y) in t.iter_mut().zip(h) {
                *x = (*x + k * y) % q;
            }
        }
        transversal.push(t);
    });

    let mut seen = KeySet::with_capacity(q, images.width, images.len());
    let mut buf = vec![0u32; images.width];
    let mut total = 0usize;
    for t in &transversal {
        let mut g = vec![0u32; images.width];
        big_phi_into(shape, &combination(code, t), &mut g);
        for k in kernel_images.iter() {
            for ((b, &x), &y) in buf.iter_mut().zip(&g).zip(k) {
                *b = (x + y) % q;
            }
            if !images.index.contains(&buf) || !seen.insert(&buf) {
                return Ok(false);
            }
            total += 1;
        }
    }
    Ok(total == images.len())
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
    fn order_p_codes_are_their_own_kernel() {
        let c = code(5, 1, 2, &[vec![1, 5, 0], vec![0, 0, 10]]);
        for r in [
            kernel_coset(&c, CAP).unwrap(),
            kernel_bruteforce(&c, CAP).unwrap(),
        ] {
            assert_eq!((r.kernel_dim, r.k_bar), (2, 0));
        }
        assert_eq!(kernel_set_exhaustive(&c, CAP).unwrap().len(), 25);
    }

    #[test]
    fn single_nonlinear_generator() {
        // v = (1, p-1): Φ(v) + Φ(v) is not an image of 2v
        for p in [3, 5] {
            let c = code(p, 0, 2, &[vec![1, p - 1]]);
            let coset = kernel_coset(&c, CAP).unwrap();
            let carries = kernel_coset_via_carries(&c, CAP).unwrap();
            let brute = kernel_bruteforce(&c, CAP).unwrap();
            assert_eq!(coset, carries);
            assert_eq!(coset.kernel_dim, brute.kernel_dim);
            assert_eq!(coset.coset_exponents, brute.coset_exponents);
            let exhaustive = kernel_set_exhaustive(&c, CAP).unwrap();
            assert_eq!(
                Some(exhaustive.len() as u128),
                c.prime().pow(brute.kernel_dim)
            );
            assert!(coset_decomposition_check(&c, &coset, CAP).unwrap());
            let k = kernel_code(&c, &coset).unwrap();
            let t = c.code_type();
            assert_eq!(k.code_type().gamma, t.gamma + coset.k_bar);
            assert_eq!(k.code_type().delta, t.delta - coset.k_bar);
        }
    }

    #[test]
    fn whole_ring_is_linear() {
        let c = code(3, 0, 1, &[vec![1]]);
        let r = kernel_coset(&c, CAP).unwrap();
        assert_eq!((r.kernel_dim, r.k_bar, r.coset_exponent_count), (2, 0, 3));
    }
}

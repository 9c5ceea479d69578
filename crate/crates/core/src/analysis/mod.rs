//! Linearity, rank and kernel of the Gray image `Φ(𝒞)`.
//!
//! Each quantity has a structural method and a brute-force oracle that
//! works directly on the enumerated Gray image.

mod kernel;
mod linearity;
mod rank;

pub use kernel::{
    coset_decomposition_check, kernel, kernel_bruteforce, kernel_code, kernel_coset,
    kernel_coset_via_carries, kernel_set_exhaustive, KernelMethod, KernelReport,
};
pub use linearity::{is_gray_linear, is_gray_linear_bruteforce, min_hamming_distance};
pub use rank::{
    rank, rank_bruteforce, rank_span, span_code, span_generators_p3, RankMethod, RankReport,
};

use crate::gray::big_phi_into;
use crate::keyset::KeySet;
use crate::mixed_code::{AdditiveCode, EnumerationCap, MixedWord, Shape};
use crate::Result;

/// All Gray images of a code, in enumeration order, plus a hash index.
pub(crate) struct GrayImages {
    pub width: usize,
    pub flat: Vec<u32>,
    pub index: KeySet,
}

impl GrayImages {
    pub fn new(code: &AdditiveCode, cap: EnumerationCap) -> Result<Self> {
        let shape = code.shape();
        let width = shape.gray_len();
        let count = code.size().unwrap_or(u128::MAX).min(cap.0) as usize;
        let mut flat = Vec::with_capacity(count * width);
        let mut index = KeySet::with_capacity(shape.p.get(), width, count);
        let mut buf = vec![0; width];
        code.for_each_codeword(cap, |w| {
            big_phi_into(shape, w, &mut buf);
            flat.extend_from_slice(&buf);
            index.insert(&buf);
        })?;
        Ok(GrayImages { width, flat, index })
    }

    pub fn iter(&self) -> std::slice::ChunksExact<'_, u32> {
        self.flat.chunks_exact(self.width)
    }

    pub fn len(&self) -> usize {
        self.flat.len() / self.width.max(1)
    }
}

/// Calls `f` on every tuple in `[0, radix)^len`, in odometer order.
pub(crate) fn for_each_tuple<F: FnMut(&[u32])>(radix: u32, len: usize, mut f: F) {
    let mut t = vec![0u32; len];
    loop {
        f(&t);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            t[i] += 1;
            if t[i] < radix {
                break;
            }
            t[i] = 0;
            i += 1;
        }
    }
}

/// `Σ aⱼ vⱼ` over the order-`p²` generators.
pub(crate) fn combination(code: &AdditiveCode, coeffs: &[u32]) -> Vec<u32> {
    let shape = code.shape();
    let mut out = vec![0; shape.len()];
    for (v, &c) in code.generators().order_p2_rows().iter().zip(coeffs) {
        if c != 0 {
            shape.add_scaled_into(&mut out, v.entries(), c);
        }
    }
    out
}

/// Inverts `Φ` on a Gray vector, or returns `None` if some block is not
/// in the image of `φ`.
pub(crate) fn gray_preimage(shape: Shape, g: &[u32], out: &mut [u32]) -> bool {
    let a = shape.alpha;
    let q = shape.p.get();
    let qs = q as usize;
    out[..a].copy_from_slice(&g[..a]);
    for (j, block) in g[a..].chunks_exact(qs).enumerate() {
        let hi = block[0];
        let lo = (block[1] + q - hi) % q;
        let mut v = hi;
        for &b in block {
            if b != v {
                return false;
            }
            v += lo;
            if v >= q {
                v -= q;
            }
        }
        out[a + j] = hi * q + lo;
    }
    true
}

pub(crate) fn gray_of(w: &MixedWord) -> Vec<u32> {
    let shape = w.shape();
    let mut out = vec![0; shape.gray_len()];
    big_phi_into(shape, w.entries(), &mut out);
    out
}

//! Seeded random codes: types, standard-form matrices and scrambles of them.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::mixed_code::{CodeType, GeneratorMatrix, MixedWord, Shape};
use crate::Prime;

/// Limits for [`random_type`].
#[derive(Debug, Clone, Copy)]
pub struct TypeLimits {
    pub max_alpha: usize,
    pub max_beta: usize,
    /// Upper bound on `γ + 2δ`.
    pub max_log_size: usize,
}

/// A uniformly chosen valid type within `limits` (rejection sampling).
pub fn random_type<R: Rng + ?Sized>(rng: &mut R, limits: TypeLimits) -> CodeType {
    assert!(limits.max_beta + limits.max_alpha > 0 && limits.max_log_size > 0);
    loop {
        let alpha = rng.gen_range(0..=limits.max_alpha);
        let beta = rng.gen_range(0..=limits.max_beta);
        let gamma = rng.gen_range(0..=limits.max_log_size);
        let delta = rng.gen_range(0..=(limits.max_log_size - gamma) / 2);
        let kappa = rng.gen_range(0..=alpha.min(gamma));
        if let Ok(t) = CodeType::new(alpha, beta, gamma, delta, kappa) {
            return t;
        }
    }
}

/// A matrix in standard block form of type `t` with uniformly random blocks.
pub fn random_standard_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    p: Prime,
    t: CodeType,
) -> GeneratorMatrix {
    let q = p.get();
    let q2 = p.square();
    let shape = Shape::new(p, t.alpha, t.beta);
    let (a, k, g, d) = (t.alpha, t.kappa, t.gamma, t.delta);
    let s = t.free_width();
    let mut rows = Vec::with_capacity(g + d);
    for i in 0..g + d {
        let mut e = vec![0u32; shape.len()];
        if i < k {
            e[i] = 1;
            for c in k..a {
                e[c] = rng.gen_range(0..q);
            }
            for c in 0..s {
                e[a + c] = q * rng.gen_range(0..q);
            }
        } else if i < g {
            for c in 0..s {
                e[a + c] = q * rng.gen_range(0..q);
            }
            e[a + s + (i - k)] = q;
        } else {
            for c in k..a {
                e[c] = rng.gen_range(0..q);
            }
            for c in 0..s {
                e[a + c] = rng.gen_range(0..q2);
            }
            for c in 0..g - k {
                e[a + s + c] = rng.gen_range(0..q);
            }
            e[a + s + (g - k) + (i - g)] = 1;
        }
        rows.push(MixedWord::from_entries(shape, e).expect("entries in range"));
    }
    GeneratorMatrix::new(shape, rows).expect("standard form rows are independent")
}

/// A code spanned by `n` uniformly random words.
pub fn random_spanned<R: Rng + ?Sized>(rng: &mut R, shape: Shape, n: usize) -> GeneratorMatrix {
    let rows: Vec<MixedWord> = (0..n).map(|_| random_word(rng, shape)).collect();
    GeneratorMatrix::from_spanning_set(shape, &rows).expect("rows share the shape")
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, shape: Shape) -> MixedWord {
    let e = (0..shape.len())
        .map(|i| rng.gen_range(0..shape.modulus(i)))
        .collect();
    MixedWord::from_entries(shape, e).expect("entries in range")
}

/// A row/column scramble of `g`.
#[derive(Debug, Clone)]
pub struct Scramble {
    pub x_perm: Vec<usize>,
    pub y_perm: Vec<usize>,
    /// Generates the column-permuted image of the original code.
    pub matrix: GeneratorMatrix,
}

/// Permutes X and Y columns at random, then applies random invertible row
/// operations that keep order-`p` rows of order `p`.
pub fn scramble<R: Rng + ?Sized>(rng: &mut R, g: &GeneratorMatrix) -> Scramble {
    let shape = g.shape();
    let q = shape.p.get() as i64;
    let q2 = q * q;
    let mut x_perm: Vec<usize> = (0..shape.alpha).collect();
    let mut y_perm: Vec<usize> = (0..shape.beta).collect();
    x_perm.shuffle(rng);
    y_perm.shuffle(rng);
    let perm = |w: &MixedWord| w.permuted(&x_perm, &y_perm);
    let mut us: Vec<MixedWord> = g.order_p_rows().iter().map(perm).collect();
    let mut vs: Vec<MixedWord> = g.order_p2_rows().iter().map(perm).collect();
    let unit = |rng: &mut R, m: i64| loop {
        let c = rng.gen_range(1..m);
        if c % q != 0 {
            return c;
        }
    };
    for i in 0..us.len() {
        let mut w = us[i].scale(unit(rng, q));
        for (j, u) in us.iter().enumerate() {
            if j != i {
                w = w.checked_add(&u.scale(rng.gen_range(0..q))).unwrap();
            }
        }
        for v in &vs {
            w = w.checked_add(&v.scale(q * rng.gen_range(0..q))).unwrap();
        }
        us[i] = w;
    }
    for i in 0..vs.len() {
        let mut w = vs[i].scale(unit(rng, q2));
        for (j, v) in vs.iter().enumerate() {
            if j != i {
                w = w.checked_add(&v.scale(rng.gen_range(0..q2))).unwrap();
            }
        }
        for u in &us {
            w = w.checked_add(&u.scale(rng.gen_range(0..q))).unwrap();
        }
        vs[i] = w;
    }
    let mut rows = us;
    rows.extend(vs);
    rows.shuffle(rng);
    Scramble {
        matrix: GeneratorMatrix::new(shape, rows).expect("row operations keep independence"),
        x_perm,
        y_perm,
    }
}

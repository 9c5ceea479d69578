use crate::mixed_code::{AdditiveCode, GeneratorMatrix, MixedWord, Shape};
use crate::Prime;

/// Column-tracked Smith normal form over `Z_{p²}`.
///
/// Returns the diagonal (each entry `1`, `p` or `0`, padded with zeros to the
/// column count) and the accumulated column transform `V`, stored by columns.
fn smith_columns(p: Prime, mut m: Vec<Vec<u32>>, cols: usize) -> (Vec<u32>, Vec<Vec<u32>>) {
    let q = p.get();
    let q2 = p.square();
    let rows = m.len();
    let mut v: Vec<Vec<u32>> = (0..cols)
        .map(|j| (0..cols).map(|i| u32::from(i == j)).collect())
        .collect();
    let mut diag = vec![0u32; cols];
    let valuation = |e: u32| -> u32 {
        if e == 0 {
            2
        } else if e.is_multiple_of(q) {
            1
        } else {
            0
        }
    };

    // col_a += k·col_b, on both the matrix and V
    let col_axpy = |m: &mut Vec<Vec<u32>>, v: &mut Vec<Vec<u32>>, a: usize, b: usize, k: u32| {
        for row in m.iter_mut() {
            row[a] = (row[a] + k * row[b]) % q2;
        }
        let vb = v[b].clone();
        for (x, y) in v[a].iter_mut().zip(vb) {
            *x = (*x + k * y) % q2;
        }
    };

    for t in 0..rows.min(cols) {
        let mut best: Option<(u32, usize, usize)> = None;
        'search: for i in t..rows {
            for j in t..cols {
                let val = valuation(m[i][j]);
                if val < 2 && best.is_none_or(|(b, _, _)| val < b) {
                    best = Some((val, i, j));
                    if val == 0 {
                        break 'search;
                    }
                }
            }
        }
        let Some((val, i, j)) = best else { break };
        m.swap(t, i);
        if j != t {
            for row in m.iter_mut() {
                row.swap(t, j);
            }
            v.swap(t, j);
        }
        // normalize the pivot to p^val
        let unit = if val == 0 { m[t][t] } else { m[t][t] / q };
        let inv = p.inv_mod_p2(unit).expect("pivot unit");
        for row in m.iter_mut() {
            row[t] = row[t] * inv % q2;
        }
        for x in v[t].iter_mut() {
            *x = *x * inv % q2;
        }
        let pivot_div = if val == 0 { 1 } else { q };
        // clear row t with column operations
        for c in t + 1..cols {
            let e = m[t][c];
            if e != 0 {
                let f = e / pivot_div;
                col_axpy(&mut m, &mut v, c, t, q2 - f);
            }
        }
        // clear column t with row operations (not tracked)
        let pivot_row = m[t].clone();
        for r in t + 1..rows {
            let e = m[r][t];
            if e != 0 {
                let f = e / pivot_div;
                for (x, &y) in m[r].iter_mut().zip(&pivot_row) {
                    *x = (*x + (q2 - f) * y) % q2;
                }
            }
        }
        diag[t] = m[t][t];
    }
    (diag, v)
}

impl AdditiveCode {
    /// The annihilator of the code under the inner product
    /// `p·⟨x, x'⟩ + ⟨y, y'⟩ (mod p²)`.
    pub fn dual(&self) -> AdditiveCode {
        let shape = self.shape();
        let p = shape.p;
        let q = p.get();
        let q2 = p.square();
        let a = shape.alpha;
        let n = shape.len();
        // a word z solves the system iff (z_X mod p | z_Y) is in the dual
        let m: Vec<Vec<u32>> = self
            .generators()
            .rows()
            .map(|g| {
                g.entries()
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| if i < a { e * q % q2 } else { e })
                    .collect()
            })
            .collect();
        let (diag, v) = smith_columns(p, m, n);
        let to_word = |col: &[u32], k: u32| -> MixedWord {
            let entries = col
                .iter()
                .enumerate()
                .map(|(i, &e)| e * k % shape.modulus(i))
                .collect();
            MixedWord::from_raw(shape, entries)
        };
        let spanning: Vec<MixedWord> = diag
            .iter()
            .zip(&v)
            .filter_map(|(&d, col)| match d {
                1 => None,
                0 => Some(to_word(col, 1)),
                _ => Some(to_word(col, q)),
            })
            .collect();
        AdditiveCode::new(span(shape, &spanning))
    }
}

fn span(shape: Shape, rows: &[MixedWord]) -> GeneratorMatrix {
    GeneratorMatrix::from_spanning_set(shape, rows).expect("rows share the code's shape")
}

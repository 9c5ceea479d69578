//! Row reduction into the standard block form
//!
//! ```text
//!   ( I_κ  T' | pT₂  0        0   )
//!   ( 0    0  | pT₁  pI_{γ−κ} 0   )
//!   ( 0    S' | S    R        I_δ )
//! ```
//!
//! reachable by row operations and coordinate permutations that keep X
//! inside X and Y inside Y.
//!
//! The reduction runs in three passes over a generating set (which may be
//! dependent):
//!
//! 1. Y pivots on units of `Z_{p²}` produce the order-`p²` rows and `I_δ`.
//! 2. X pivots among the remaining (now order-`p`) rows produce `I_κ`.
//! 3. Y pivots on nonzero multiples of `p` produce `pI_{γ−κ}`; the order-`p²`
//!    rows are reduced modulo `p` in those columns, giving `R`.
//!
//! Pivot rows are chosen by lowest row index. X pivots take the lowest
//! column, Y pivots the highest, so the identity blocks land where the block
//! form puts them and a matrix already in standard form is a fixed point.

use crate::mixed_code::{CodeType, GeneratorMatrix, MixedWord, Shape};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Free,
    Unit,
    XPivot,
    PPivot,
}

/// A reduced generating set in the original coordinates, with the pivot
/// column of every row.
#[derive(Debug, Clone)]
pub(crate) struct Reduction {
    shape: Shape,
    /// `(X column, row)`: the row has 1 there, zeros at the other pivots.
    x_rows: Vec<(usize, Vec<u32>)>,
    /// `(Y column, row)`: the row has `p` there.
    p_rows: Vec<(usize, Vec<u32>)>,
    /// `(Y column, row)`: the row has 1 there.
    unit_rows: Vec<(usize, Vec<u32>)>,
}

impl Reduction {
    pub fn new<'a, I>(shape: Shape, rows: I) -> Self
    where
        I: IntoIterator<Item = &'a [u32]>,
    {
        let p = shape.p;
        let q = p.get();
        let q2 = p.square();
        let a = shape.alpha;
        let mut rows: Vec<Vec<u32>> = rows.into_iter().map(|r| r.to_vec()).collect();
        let mut role = vec![Role::Free; rows.len()];
        let mut y_taken = vec![false; shape.beta];
        let mut x_taken = vec![false; shape.alpha];
        let mut x_rows = Vec::new();
        let mut p_rows = Vec::new();
        let mut unit_rows = Vec::new();

        let scale = |row: &mut Vec<u32>, k: u32| {
            for (i, e) in row.iter_mut().enumerate() {
                *e = *e * k % shape.modulus(i);
            }
        };

        // Pass 1: unit pivots in Y.
        loop {
            let found = (0..rows.len())
                .filter(|&i| role[i] == Role::Free)
                .find_map(|i| {
                    (0..shape.beta)
                        .rev()
                        .find(|&j| !y_taken[j] && !rows[i][a + j].is_multiple_of(q))
                        .map(|j| (i, j))
                });
            let Some((i, j)) = found else { break };
            let inv = p.inv_mod_p2(rows[i][a + j]).expect("unit pivot");
            scale(&mut rows[i], inv);
            let pivot = rows[i].clone();
            for (k, row) in rows.iter_mut().enumerate() {
                let f = row[a + j];
                if k != i && f != 0 {
                    shape.add_scaled_into(row, &pivot, q2 - f);
                }
            }
            role[i] = Role::Unit;
            y_taken[j] = true;
            unit_rows.push((j, i));
        }

        // Pass 2: X pivots among order-p rows.
        loop {
            let found = (0..rows.len())
                .filter(|&i| role[i] == Role::Free)
                .find_map(|i| {
                    (0..shape.alpha)
                        .find(|&j| !x_taken[j] && rows[i][j] != 0)
                        .map(|j| (i, j))
                });
            let Some((i, j)) = found else { break };
            let inv = p.inv_mod_p(rows[i][j]).expect("nonzero X pivot");
            scale(&mut rows[i], inv);
            let pivot = rows[i].clone();
            for (k, row) in rows.iter_mut().enumerate() {
                let f = row[j];
                if k != i && f != 0 {
                    // pivot has order p, so multiplying by q - f acts as -f
                    shape.add_scaled_into(row, &pivot, q - f);
                }
            }
            role[i] = Role::XPivot;
            x_taken[j] = true;
            x_rows.push((j, i));
        }

        // Pass 3: pivots p·t in Y among the remaining order-p rows.
        loop {
            let found = (0..rows.len())
                .filter(|&i| role[i] == Role::Free)
                .find_map(|i| {
                    (0..shape.beta)
                        .rev()
                        .find(|&j| !y_taken[j] && rows[i][a + j] != 0)
                        .map(|j| (i, j))
                });
            let Some((i, j)) = found else { break };
            debug_assert_eq!(rows[i][a + j] % q, 0);
            let inv = p.inv_mod_p(rows[i][a + j] / q).expect("nonzero p-multiple");
            scale(&mut rows[i], inv);
            let pivot = rows[i].clone();
            for (k, row) in rows.iter_mut().enumerate() {
                let f = row[a + j] / q;
                if k != i && f != 0 {
                    shape.add_scaled_into(row, &pivot, q2 - f);
                }
            }
            role[i] = Role::PPivot;
            y_taken[j] = true;
            p_rows.push((j, i));
        }

        debug_assert!(rows
            .iter()
            .zip(&role)
            .all(|(r, &ro)| ro != Role::Free || r.iter().all(|&e| e == 0)));

        let take = |list: Vec<(usize, usize)>, rows: &[Vec<u32>]| -> Vec<(usize, Vec<u32>)> {
            list.into_iter()
                .map(|(c, i)| (c, rows[i].clone()))
                .collect()
        };
        Reduction {
            shape,
            x_rows: take(x_rows, &rows),
            p_rows: take(p_rows, &rows),
            unit_rows: take(unit_rows, &rows),
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn code_type(&self) -> CodeType {
        let kappa = self.x_rows.len();
        CodeType {
            alpha: self.shape.alpha,
            beta: self.shape.beta,
            gamma: kappa + self.p_rows.len(),
            delta: self.unit_rows.len(),
            kappa,
        }
    }

    /// Independent generators: order-`p` rows first, then order-`p²` rows.
    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.x_rows
            .iter()
            .chain(&self.p_rows)
            .chain(&self.unit_rows)
            .map(|(_, r)| r.as_slice())
    }

    /// Membership by successive elimination of the pivot coordinates.
    pub fn contains(&self, word: &[u32]) -> bool {
        let mut buf = word.to_vec();
        self.reduce_in_place(&mut buf)
    }

    pub(crate) fn reduce_in_place(&self, buf: &mut [u32]) -> bool {
        let shape = self.shape;
        let q = shape.p.get();
        let q2 = shape.p.square();
        let a = shape.alpha;
        for (c, row) in &self.unit_rows {
            let nu = buf[a + c];
            if nu != 0 {
                shape.add_scaled_into(buf, row, q2 - nu);
            }
        }
        for (c, row) in &self.x_rows {
            let l = buf[*c];
            if l != 0 {
                shape.add_scaled_into(buf, row, q - l);
            }
        }
        for (c, row) in &self.p_rows {
            let e = buf[a + c];
            if !e.is_multiple_of(q) {
                return false;
            }
            if e != 0 {
                shape.add_scaled_into(buf, row, q - e / q);
            }
        }
        buf.iter().all(|&e| e == 0)
    }

    pub fn standard_form(&self) -> StandardForm {
        let shape = self.shape;
        let mut x_perm: Vec<usize> = self.x_rows.iter().map(|(c, _)| *c).collect();
        let rest: Vec<usize> = (0..shape.alpha).filter(|c| !x_perm.contains(c)).collect();
        x_perm.extend(rest);
        let pivots: Vec<usize> = self
            .p_rows
            .iter()
            .chain(&self.unit_rows)
            .map(|(c, _)| *c)
            .collect();
        let mut y_perm: Vec<usize> = (0..shape.beta).filter(|c| !pivots.contains(c)).collect();
        y_perm.extend(pivots);
        let permute = |rows: &[(usize, Vec<u32>)]| -> Vec<MixedWord> {
            rows.iter()
                .map(|(_, r)| MixedWord::from_raw(shape, r.clone()).permuted(&x_perm, &y_perm))
                .collect()
        };
        let mut order_p = permute(&self.x_rows);
        order_p.extend(permute(&self.p_rows));
        let order_p2 = permute(&self.unit_rows);
        let code_type = self.code_type();
        StandardForm {
            matrix: GeneratorMatrix::from_parts(shape, order_p, order_p2, code_type),
            x_perm,
            y_perm,
            code_type,
        }
    }
}

/// A generator matrix in standard block form together with the coordinate
/// permutation that carries the original code onto it.
#[derive(Debug, Clone)]
pub struct StandardForm {
    /// New X position `i` holds old X position `x_perm[i]`.
    pub x_perm: Vec<usize>,
    /// New Y position `i` holds old Y position `y_perm[i]`.
    pub y_perm: Vec<usize>,
    pub matrix: GeneratorMatrix,
    pub code_type: CodeType,
}

impl StandardForm {
    pub fn permute_word(&self, w: &MixedWord) -> MixedWord {
        w.permuted(&self.x_perm, &self.y_perm)
    }

    pub fn is_identity_permutation(&self) -> bool {
        self.x_perm.iter().enumerate().all(|(i, &c)| i == c)
            && self.y_perm.iter().enumerate().all(|(i, &c)| i == c)
    }

    fn block(
        &self,
        rows: std::ops::Range<usize>,
        cols: std::ops::Range<usize>,
        div: u32,
    ) -> Vec<Vec<u32>> {
        let all: Vec<&MixedWord> = self.matrix.rows().collect();
        all[rows]
            .iter()
            .map(|w| w.entries()[cols.clone()].iter().map(|&e| e / div).collect())
            .collect()
    }

    fn bounds(&self) -> (usize, usize, usize, usize, usize) {
        let t = self.code_type;
        let a = t.alpha;
        let s = t.free_width();
        (a, t.kappa, t.gamma, s, t.gamma - t.kappa)
    }

    /// `T'`: X block of the `I_κ` rows right of the identity.
    pub fn t_prime(&self) -> Vec<Vec<u32>> {
        let (a, k, _, _, _) = self.bounds();
        self.block(0..k, k..a, 1)
    }

    /// `T₂`: free Y block of the `I_κ` rows, divided by `p`.
    pub fn t2(&self) -> Vec<Vec<u32>> {
        let (a, k, _, s, _) = self.bounds();
        self.block(0..k, a..a + s, self.matrix.shape().p.get())
    }

    /// `T₁`: free Y block of the `pI_{γ−κ}` rows, divided by `p`.
    pub fn t1(&self) -> Vec<Vec<u32>> {
        let (a, k, g, s, _) = self.bounds();
        self.block(k..g, a..a + s, self.matrix.shape().p.get())
    }

    /// `S'`: X block of the order-`p²` rows right of the `I_κ` columns.
    pub fn s_prime(&self) -> Vec<Vec<u32>> {
        let (a, k, g, _, _) = self.bounds();
        let d = self.code_type.delta;
        self.block(g..g + d, k..a, 1)
    }

    /// `S`: free Y block of the order-`p²` rows, over `Z_{p²}`.
    pub fn s(&self) -> Vec<Vec<u32>> {
        let (a, _, g, s, _) = self.bounds();
        let d = self.code_type.delta;
        self.block(g..g + d, a..a + s, 1)
    }

    /// `R`: order-`p²` rows under the `pI_{γ−κ}` columns, entries in `[0, p)`.
    pub fn r(&self) -> Vec<Vec<u32>> {
        let (a, _, g, s, gk) = self.bounds();
        let d = self.code_type.delta;
        self.block(g..g + d, a + s..a + s + gk, 1)
    }

    /// Checks the literal block layout: identity blocks in place, zeros where
    /// the form has zeros and multiples of `p` where it has `pT`.
    pub fn has_block_layout(&self) -> bool {
        let t = self.code_type;
        let q = self.matrix.shape().p.get();
        let (a, k, g, s, gk) = self.bounds();
        let d = t.delta;
        let rows: Vec<&MixedWord> = self.matrix.rows().collect();
        if rows.len() != g + d {
            return false;
        }
        let y0 = a;
        let ok_row = |i: usize, w: &MixedWord| -> bool {
            let e = w.entries();
            (0..e.len()).all(|c| {
                let v = e[c];
                if c < a {
                    // X columns
                    if c < k {
                        v == u32::from(i < k && i == c)
                    } else {
                        i < k || i >= g || v == 0
                    }
                } else {
                    let y = c - y0;
                    if y < s {
                        i >= g || v.is_multiple_of(q)
                    } else if y < s + gk {
                        let j = y - s;
                        if i < k {
                            v == 0
                        } else if i < g {
                            v == if i - k == j { q } else { 0 }
                        } else {
                            v < q
                        }
                    } else {
                        let j = y - s - gk;
                        if i < g {
                            v == 0
                        } else {
                            v == u32::from(i - g == j)
                        }
                    }
                }
            })
        };
        rows.iter().enumerate().all(|(i, w)| ok_row(i, w))
    }
}

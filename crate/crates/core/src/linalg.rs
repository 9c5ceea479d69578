//! Dense Gaussian elimination over `Z_p`.
//!
//! [`Echelon`] keeps a basis in reduced row echelon form so that reducing a
//! vector against it yields a canonical coset representative. Pivots are the
//! first nonzero column of each inserted row.

use crate::Prime;

#[derive(Debug, Clone)]
pub struct Echelon {
    p: Prime,
    width: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(p: Prime, width: usize) -> Self {
        Echelon {
            p,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` in place against the basis; the result is zero exactly when
    /// `v` lies in the row space.
    pub fn reduce_in_place(&self, v: &mut [u32]) {
        debug_assert_eq!(v.len(), self.width);
        let q = self.p.get();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = v[c];
            if f == 0 {
                continue;
            }
            let m = q - f;
            for (x, &r) in v.iter_mut().zip(row).skip(c) {
                *x = (*x + m * r) % q;
            }
        }
    }

    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut out = v.to_vec();
        self.reduce_in_place(&mut out);
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the row space. Returns `true` when the rank grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut r = self.reduce(v);
        let Some(c) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let q = self.p.get();
        let inv = self
            .p
            .inv_mod_p(r[c])
            .expect("nonzero residue mod p is a unit");
        for x in r.iter_mut() {
            *x = *x * inv % q;
        }
        for row in self.rows.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let m = q - f;
            for (x, &y) in row.iter_mut().zip(&r) {
                *x = (*x + m * y) % q;
            }
        }
        let at = self.pivots.partition_point(|&pc| pc < c);
        self.rows.insert(at, r);
        self.pivots.insert(at, c);
        true
    }
}

/// Rank over `Z_p` of a list of equal-length vectors.
pub fn rank<'a, I>(p: Prime, width: usize, rows: I) -> usize
where
    I: IntoIterator<Item = &'a [u32]>,
{
    let mut e = Echelon::new(p, width);
    for r in rows {
        e.insert(r);
        if e.rank() == width {
            break;
        }
    }
    e.rank()
}

//! Witness codes with prescribed rank, kernel dimension, or both, built in
//! standard form with `T' = T₁ = T₂ = S' = R = 0` and a chosen `S` block.
//!
//! Rank and pair constructions exist for `p = 3` only; kernel constructions
//! work for every odd prime.

use std::ops::RangeInclusive;

use crate::analysis::{kernel_coset, rank_span};
use crate::mixed_code::{
    AdditiveCode, CodeType, EnumerationCap, GeneratorMatrix, MixedWord, Shape,
};
use crate::ring::binomial;
use crate::{Error, Prime, Result};

/// The column families used to fill `S` for `p = 3`, each column of height
/// `size`:
///
/// * `A = 2I`
/// * `B`: `h_k + h_l` for `k < l`
/// * `C = 2B`
/// * `D`: `h_k + 2h_l` for `k < l`
/// * `E`: `h_x + h_y + h_z` for `x < y < z`
///
/// Pairs and triples are in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnDictionary {
    pub size: usize,
    pub a: Vec<Vec<u32>>,
    pub b: Vec<Vec<u32>>,
    pub c: Vec<Vec<u32>>,
    pub d: Vec<Vec<u32>>,
    pub e: Vec<Vec<u32>>,
}

impl ColumnDictionary {
    pub fn new(size: usize) -> Self {
        let h = |idx: &[(usize, u32)]| -> Vec<u32> {
            let mut col = vec![0; size];
            for &(i, v) in idx {
                col[i] = v;
            }
            col
        };
        let mut a = Vec::new();
        let mut b = Vec::new();
        let mut d = Vec::new();
        let mut e = Vec::new();
        for k in 0..size {
            a.push(h(&[(k, 2)]));
            for l in k + 1..size {
                b.push(h(&[(k, 1), (l, 1)]));
                d.push(h(&[(k, 1), (l, 2)]));
                for z in l + 1..size {
                    e.push(h(&[(k, 1), (l, 1), (z, 1)]));
                }
            }
        }
        let c = b
            .iter()
            .map(|col| col.iter().map(|x| 2 * x).collect())
            .collect();
        ColumnDictionary {
            size,
            a,
            b,
            c,
            d,
            e,
        }
    }

    /// The primed variant: the first column of `C` becomes all-2.
    pub fn primed(size: usize) -> Self {
        let mut dict = Self::new(size);
        if let Some(first) = dict.c.first_mut() {
            first.fill(2);
        }
        dict
    }

    /// `M = (A | B | C | D | E)`.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        [&self.a, &self.b, &self.c, &self.d, &self.e]
            .into_iter()
            .flatten()
            .cloned()
            .collect()
    }

    /// Column order for pair witnesses: all-2 first, then `A`, `B`, the rest
    /// of the primed `C`, `D`, `E`.
    pub fn pair_sequence(size: usize) -> Vec<Vec<u32>> {
        let dict = Self::primed(size);
        let mut out = vec![vec![2; size]];
        out.extend(dict.a.iter().cloned());
        out.extend(dict.b.iter().cloned());
        out.extend(dict.c.iter().skip(1).cloned());
        out.extend(dict.d.iter().cloned());
        out.extend(dict.e.iter().cloned());
        out
    }
}

fn checked(t: CodeType) -> Result<CodeType> {
    t.validate()?;
    Ok(t)
}

/// Admissible ranks for `p = 3`:
/// `γ+2δ ..= min(β+δ+κ, γ+δ+C(δ+1,2)+C(δ+2,3))`.
pub fn rank_range(t: CodeType) -> Result<RangeInclusive<usize>> {
    let t = checked(t)?;
    let d = t.delta;
    let top = (t.beta + d + t.kappa).min(t.gamma + d + binomial(d + 1, 2) + binomial(d + 2, 3));
    Ok(t.log_size()..=top)
}

/// Admissible kernel dimensions: `γ+δ ..= γ+2δ`.
pub fn kernel_range(t: CodeType) -> Result<RangeInclusive<usize>> {
    let t = checked(t)?;
    Ok(t.gamma + t.delta..=t.log_size())
}

/// Largest `r̄` for a given `k̄ ≥ 1`: `min(β−(γ−κ)−δ, C(k̄,2)+C(k̄+2,3))`.
fn pair_r_bar_max(t: CodeType, k_bar: usize) -> usize {
    t.free_width()
        .min(binomial(k_bar, 2) + binomial(k_bar + 2, 3))
}

/// Ranks that can be paired with kernel dimension `k` for `p = 3`.
/// May be empty when the free block has width zero.
pub fn pair_range(t: CodeType, k: usize) -> Result<Vec<usize>> {
    let kr = kernel_range(t)?;
    if !kr.contains(&k) {
        return Err(Error::OutOfRange(format!(
            "kernel dimension {k} outside {}..={} for type {t}",
            kr.start(),
            kr.end()
        )));
    }
    let base = t.log_size();
    let k_bar = base - k;
    if k_bar == 0 {
        return Ok(vec![base]);
    }
    Ok((1..=pair_r_bar_max(t, k_bar)).map(|r| base + r).collect())
}

/// Standard-form matrix with every block zero except `S` (`δ × s`, row-major).
pub fn matrix_with_s(p: Prime, t: CodeType, s_block: &[Vec<u32>]) -> Result<GeneratorMatrix> {
    let t = checked(t)?;
    let shape = Shape::new(p, t.alpha, t.beta);
    let (a, k, g, d) = (t.alpha, t.kappa, t.gamma, t.delta);
    let s = t.free_width();
    assert!(s_block.len() == d && s_block.iter().all(|r| r.len() == s));
    let q = p.get();
    let mut rows = Vec::with_capacity(g + d);
    for i in 0..g + d {
        let mut e = vec![0u32; shape.len()];
        if i < k {
            e[i] = 1;
        } else if i < g {
            e[a + s + (i - k)] = q;
        } else {
            e[a..a + s].copy_from_slice(&s_block[i - g]);
            e[a + s + (g - k) + (i - g)] = 1;
        }
        rows.push(MixedWord::from_entries(shape, e)?);
    }
    GeneratorMatrix::new(shape, rows)
}

/// Places `cols` (each of height `δ`) as the leading columns of `S`.
fn s_from_columns(t: CodeType, cols: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let s = t.free_width();
    let mut block = vec![vec![0u32; s]; t.delta];
    for (j, col) in cols.iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            block[i][j] = v;
        }
    }
    block
}

/// A `p = 3` code of type `t` whose Gray image has rank `r`: `S` holds the
/// first `r − γ − 2δ` columns of `(A | B | C | D | E)`.
pub fn construct_rank_code(t: CodeType, r: usize) -> Result<GeneratorMatrix> {
    let range = rank_range(t)?;
    if !range.contains(&r) {
        return Err(Error::OutOfRange(format!(
            "rank {r} outside {}..={} for type {t}",
            range.start(),
            range.end()
        )));
    }
    let r_bar = r - t.log_size();
    let cols: Vec<Vec<u32>> = ColumnDictionary::new(t.delta)
        .columns()
        .into_iter()
        .take(r_bar)
        .collect();
    let p = Prime::new(3)?;
    matrix_with_s(p, t, &s_from_columns(t, &cols))
}

fn kernel_s_block(p: Prime, t: CodeType, k: usize, single_column: bool) -> Result<Vec<Vec<u32>>> {
    let range = kernel_range(t)?;
    if !range.contains(&k) {
        return Err(Error::OutOfRange(format!(
            "kernel dimension {k} outside {}..={} for type {t}",
            range.start(),
            range.end()
        )));
    }
    let k_bar = t.log_size() - k;
    let s = t.free_width();
    if k_bar >= 1 && s == 0 {
        return Err(Error::OutOfRange(format!(
            "k̄ = {k_bar} needs β − (γ − κ) − δ ≥ 1, but it is 0 for type {t}"
        )));
    }
    let fill = p.get() - 1;
    Ok((0..t.delta)
        .map(|i| {
            (0..s)
                .map(|j| {
                    if i < k_bar && (j == 0 || !single_column) {
                        fill
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect())
}

/// A code of type `t` whose Gray image has kernel dimension `k`: the first
/// `k̄ = γ + 2δ − k` rows of `S` are all `p − 1`.
pub fn construct_kernel_code(p: Prime, t: CodeType, k: usize) -> Result<GeneratorMatrix> {
    matrix_with_s(p, t, &kernel_s_block(p, t, k, false)?)
}

/// Like [`construct_kernel_code`] but with `p − 1` only in the first column.
pub fn construct_kernel_code_single_column(
    p: Prime,
    t: CodeType,
    k: usize,
) -> Result<GeneratorMatrix> {
    matrix_with_s(p, t, &kernel_s_block(p, t, k, true)?)
}

/// A `p = 3` code of type `t` with rank `r` and kernel dimension `k`.
///
/// The top `k̄` rows of `S` take the first `r̄` columns of
/// [`ColumnDictionary::pair_sequence`]; the bottom `δ − k̄` rows are zero.
pub fn construct_pair_code(t: CodeType, r: usize, k: usize) -> Result<GeneratorMatrix> {
    let allowed = pair_range(t, k)?;
    let base = t.log_size();
    let k_bar = base - k;
    if !allowed.contains(&r) {
        let why = if k_bar == 0 {
            format!("k̄ = 0 requires r = {base}")
        } else if r <= base {
            "r̄ must be at least 1 when k̄ ≥ 1".to_string()
        } else if r - base > binomial(k_bar, 2) + binomial(k_bar + 2, 3) {
            format!(
                "r̄ = {} exceeds C(k̄,2)+C(k̄+2,3) = {} for k̄ = {k_bar}",
                r - base,
                binomial(k_bar, 2) + binomial(k_bar + 2, 3)
            )
        } else {
            format!("r̄ = {} exceeds β−(γ−κ)−δ = {}", r - base, t.free_width())
        };
        return Err(Error::OutOfRange(format!(
            "pair (r={r}, k={k}) for type {t}: {why}"
        )));
    }
    let r_bar = r - base;
    let cols: Vec<Vec<u32>> = ColumnDictionary::pair_sequence(k_bar)
        .into_iter()
        .take(r_bar)
        .map(|mut c| {
            c.resize(t.delta, 0);
            c
        })
        .collect();
    let p = Prime::new(3)?;
    matrix_with_s(p, t, &s_from_columns(t, &cols))
}

/// The `(r, k)` grid for a type: rows by kernel dimension descending,
/// columns by rank ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AchievabilityTable {
    pub code_type: CodeType,
    pub ranks: Vec<usize>,
    pub kernels: Vec<usize>,
    /// `cells[i][j]` for kernel `kernels[i]` and rank `ranks[j]`.
    pub cells: Vec<Vec<bool>>,
}

/// Outcome of re-analysing the witness for one achievable cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCheck {
    pub rank: usize,
    pub kernel: usize,
    pub measured_rank: usize,
    pub measured_kernel: usize,
}

impl CellCheck {
    pub fn ok(&self) -> bool {
        self.rank == self.measured_rank && self.kernel == self.measured_kernel
    }
}

impl AchievabilityTable {
    pub fn new(t: CodeType) -> Result<Self> {
        let ranks: Vec<usize> = rank_range(t)?.collect();
        let kernels: Vec<usize> = kernel_range(t)?.rev().collect();
        let cells = kernels
            .iter()
            .map(|&k| {
                let allowed = pair_range(t, k)?;
                Ok(ranks.iter().map(|r| allowed.contains(r)).collect())
            })
            .collect::<Result<Vec<Vec<bool>>>>()?;
        Ok(AchievabilityTable {
            code_type: t,
            ranks,
            kernels,
            cells,
        })
    }

    /// `k\r,R1,R2,…` header, then one row per kernel dimension with `1`/`0`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k\\r");
        for r in &self.ranks {
            out.push_str(&format!(",{r}"));
        }
        out.push('\n');
        for (k, row) in self.kernels.iter().zip(&self.cells) {
            out.push_str(&k.to_string());
            for &c in row {
                out.push_str(if c { ",1" } else { ",0" });
            }
            out.push('\n');
        }
        out
    }

    /// Achievable cells as `(r, k)` pairs.
    pub fn achievable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (k, row) in self.kernels.iter().zip(&self.cells) {
            for (r, &c) in self.ranks.iter().zip(row) {
                if c {
                    out.push((*r, *k));
                }
            }
        }
        out
    }

    /// Builds the witness for every achievable cell and measures it: rank by
    /// span elimination, kernel by the coset method.
    pub fn verify(&self, cap: EnumerationCap) -> Result<Vec<CellCheck>> {
        self.achievable()
            .into_iter()
            .map(|(r, k)| {
                let code = AdditiveCode::new(construct_pair_code(self.code_type, r, k)?);
                Ok(CellCheck {
                    rank: r,
                    kernel: k,
                    measured_rank: rank_span(&code)?.rank,
                    measured_kernel: kernel_coset(&code, cap)?.kernel_dim,
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::kernel_bruteforce;
    use crate::linalg::Echelon;

    fn ty(a: usize, b: usize, g: usize, d: usize, k: usize) -> CodeType {
        CodeType::new(a, b, g, d, k).unwrap()
    }

    #[test]
    fn dictionary_shapes() {
        for size in 0..7 {
            let dict = ColumnDictionary::new(size);
            let c2 = binomial(size, 2);
            assert_eq!(
                [
                    dict.a.len(),
                    dict.b.len(),
                    dict.c.len(),
                    dict.d.len(),
                    dict.e.len()
                ],
                [size, c2, c2, c2, binomial(size, 3)]
            );
            let mut all = dict.columns();
            let n = all.len();
            assert_eq!(
                n + 2 * size,
                size + binomial(size + 1, 2) + binomial(size + 2, 3)
            );
            all.sort();
            all.dedup();
            assert_eq!(all.len(), n);
            assert_eq!(
                ColumnDictionary::pair_sequence(size).len(),
                if size == 0 {
                    1
                } else {
                    binomial(size, 2) + binomial(size + 2, 3) + usize::from(size == 1)
                }
            );
        }
        let dict = ColumnDictionary::new(4);
        assert_eq!(dict.b[0], vec![1, 1, 0, 0]);
        assert_eq!(dict.d[0], vec![1, 2, 0, 0]);
        assert_eq!(dict.e[3], vec![0, 1, 1, 1]);
        assert_eq!(ColumnDictionary::primed(4).c[0], vec![2, 2, 2, 2]);
        assert_eq!(ColumnDictionary::primed(4).c[1], vec![2, 0, 2, 0]);
    }

    #[test]
    fn ranges() {
        assert_eq!(rank_range(ty(2, 10, 2, 4, 1)).unwrap(), 10..=15);
        assert_eq!(rank_range(ty(2, 14, 2, 6, 1)).unwrap(), 14..=21);
        assert_eq!(rank_range(ty(1, 3, 2, 0, 1)).unwrap(), 2..=2);
        assert_eq!(kernel_range(ty(2, 9, 2, 5, 1)).unwrap(), 7..=12);
        assert_eq!(kernel_range(ty(2, 14, 2, 6, 1)).unwrap(), 8..=14);
        let t = ty(2, 14, 2, 6, 1);
        assert_eq!(pair_range(t, 13).unwrap(), vec![15]);
        assert_eq!(pair_range(t, 12).unwrap(), (15..=19).collect::<Vec<_>>());
        assert_eq!(pair_range(t, 14).unwrap(), vec![14]);
        assert_eq!(pair_range(t, 8).unwrap(), (15..=21).collect::<Vec<_>>());
        assert!(matches!(pair_range(t, 7), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn rank_witness_blocks() {
        let t = ty(2, 10, 2, 4, 1);
        let sf = construct_rank_code(t, 10).unwrap().standardize();
        assert!(sf.s().iter().flatten().all(|&e| e == 0));
        let g = construct_rank_code(t, 15).unwrap();
        assert_eq!(g.code_type(), t);
        let s = g.standardize().s();
        let col = |j: usize| s.iter().map(|r| r[j]).collect::<Vec<_>>();
        for j in 0..4 {
            let mut a = vec![0; 4];
            a[j] = 2;
            assert_eq!(col(j), a);
        }
        assert_eq!(col(4), vec![1, 1, 0, 0]);
        assert!(construct_rank_code(t, 16).is_err());
        assert!(construct_rank_code(t, 9).is_err());
    }

    #[test]
    fn rank_witnesses_hit_their_targets() {
        for t in [ty(1, 6, 1, 2, 1), ty(0, 8, 1, 3, 0), ty(2, 10, 2, 4, 1)] {
            for r in rank_range(t).unwrap() {
                let c = AdditiveCode::new(construct_rank_code(t, r).unwrap());
                assert_eq!(rank_span(&c).unwrap().rank, r, "{t} r={r}");
            }
        }
    }

    #[test]
    fn kernel_witnesses_hit_their_targets() {
        let cap = EnumerationCap::DEFAULT;
        for p in [3, 5] {
            let p = Prime::new(p).unwrap();
            let t = ty(1, 4, 1, 2, 1);
            for k in kernel_range(t).unwrap() {
                for g in [
                    construct_kernel_code(p, t, k).unwrap(),
                    construct_kernel_code_single_column(p, t, k).unwrap(),
                ] {
                    assert_eq!(g.code_type(), t);
                    let c = AdditiveCode::new(g);
                    assert_eq!(kernel_coset(&c, cap).unwrap().kernel_dim, k);
                    assert_eq!(kernel_bruteforce(&c, cap).unwrap().kernel_dim, k);
                }
            }
        }
        let t0 = ty(1, 2, 1, 2, 1);
        assert_eq!(t0.free_width(), 0);
        assert!(construct_kernel_code(Prime::new(3).unwrap(), t0, 5).is_ok());
        assert!(matches!(
            construct_kernel_code(Prime::new(3).unwrap(), t0, 4),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn pair_witness_example_columns() {
        let t = ty(2, 14, 2, 6, 1);
        let s = construct_pair_code(t, 20, 10).unwrap().standardize().s();
        let expect_cols = [
            vec![2, 2, 2, 2, 0, 0],
            vec![2, 0, 0, 0, 0, 0],
            vec![0, 2, 0, 0, 0, 0],
            vec![0, 0, 2, 0, 0, 0],
            vec![0, 0, 0, 2, 0, 0],
            vec![1, 1, 0, 0, 0, 0],
            vec![0; 6],
        ];
        for (j, col) in expect_cols.iter().enumerate() {
            assert_eq!(&s.iter().map(|r| r[j]).collect::<Vec<_>>(), col);
        }
        let err = construct_pair_code(t, 16, 13).unwrap_err().to_string();
        assert!(err.contains("C(k̄,2)+C(k̄+2,3)"), "{err}");
    }

    #[test]
    fn table_one_pattern() {
        let table = AchievabilityTable::new(ty(2, 14, 2, 6, 1)).unwrap();
        let expected = "k\\r,14,15,16,17,18,19,20,21\n\
                        14,1,0,0,0,0,0,0,0\n\
                        13,0,1,0,0,0,0,0,0\n\
                        12,0,1,1,1,1,1,0,0\n\
                        11,0,1,1,1,1,1,1,1\n\
                        10,0,1,1,1,1,1,1,1\n\
                        9,0,1,1,1,1,1,1,1\n\
                        8,0,1,1,1,1,1,1,1\n";
        assert_eq!(table.to_csv(), expected);
        let single = AchievabilityTable::new(ty(1, 2, 1, 0, 1)).unwrap();
        assert_eq!(single.to_csv(), "k\\r,1\n1,1\n");
    }

    #[test]
    fn small_table_verifies() {
        let table = AchievabilityTable::new(ty(1, 6, 1, 3, 1)).unwrap();
        let checks = table.verify(EnumerationCap::DEFAULT).unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(CellCheck::ok), "{checks:?}");
    }

    #[test]
    fn echelon_sanity_for_dictionary() {
        // columns of A are independent over Z_3 after reduction mod 3
        let p = Prime::new(3).unwrap();
        let mut e = Echelon::new(p, 4);
        for c in ColumnDictionary::new(4).a {
            e.insert(&c);
        }
        assert_eq!(e.rank(), 4);
    }
}

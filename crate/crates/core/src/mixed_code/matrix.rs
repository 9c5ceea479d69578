use crate::keyset::KeySet;
use crate::mixed_code::standard::Reduction;
use crate::mixed_code::{CodeType, MixedWord, Shape, StandardForm};
use crate::{Error, Prime, Result};

/// Ordered generators of an additive code: `γ` rows of order `p` (the `uᵢ`)
/// followed by `δ` rows of order `p²` (the `vⱼ`).
///
/// The rows are independent: they generate exactly `p^(γ+2δ)` words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    shape: Shape,
    order_p: Vec<MixedWord>,
    order_p2: Vec<MixedWord>,
    code_type: CodeType,
}

impl GeneratorMatrix {
    /// Classifies `rows` by order and checks that they are independent.
    pub fn new(shape: Shape, rows: Vec<MixedWord>) -> Result<Self> {
        let q = shape.p.get();
        let mut order_p = Vec::new();
        let mut order_p2 = Vec::new();
        for (i, row) in rows.into_iter().enumerate() {
            shape.check(&row.shape())?;
            match row.order() {
                1 => {
                    return Err(Error::InvalidGenerators(format!("row {i} is zero")));
                }
                o if o == q => order_p.push(row),
                _ => order_p2.push(row),
            }
        }
        let reduction = Reduction::new(shape, order_p.iter().chain(&order_p2).map(|w| w.entries()));
        let code_type = reduction.code_type();
        let claimed = order_p.len() + 2 * order_p2.len();
        if claimed != code_type.log_size() {
            return Err(Error::InvalidGenerators(format!(
                "rows are dependent: {} rows of order p and {} of order p² would give p^{} words, \
                 but they generate p^{}",
                order_p.len(),
                order_p2.len(),
                claimed,
                code_type.log_size()
            )));
        }
        Ok(GeneratorMatrix {
            shape,
            order_p,
            order_p2,
            code_type,
        })
    }

    /// Builds a matrix from integer rows of length `α + β`.
    pub fn from_rows(p: Prime, alpha: usize, beta: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let shape = Shape::new(p, alpha, beta);
        let words = rows
            .iter()
            .map(|r| MixedWord::from_entries(shape, r.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(shape, words)
    }

    /// Reduces an arbitrary (possibly dependent) generating set to an
    /// independent generator matrix of the same code.
    pub fn from_spanning_set(shape: Shape, rows: &[MixedWord]) -> Result<Self> {
        for r in rows {
            shape.check(&r.shape())?;
        }
        let reduction = Reduction::new(shape, rows.iter().map(|w| w.entries()));
        Ok(Self::from_reduction(&reduction))
    }

    fn from_reduction(reduction: &Reduction) -> Self {
        let code_type = reduction.code_type();
        let shape = reduction.shape();
        let rows: Vec<MixedWord> = reduction
            .rows()
            .map(|r| MixedWord::from_raw(shape, r.to_vec()))
            .collect();
        let (order_p, order_p2) = rows.split_at(code_type.gamma);
        GeneratorMatrix {
            shape,
            order_p: order_p.to_vec(),
            order_p2: order_p2.to_vec(),
            code_type,
        }
    }

    pub(crate) fn from_parts(
        shape: Shape,
        order_p: Vec<MixedWord>,
        order_p2: Vec<MixedWord>,
        code_type: CodeType,
    ) -> Self {
        GeneratorMatrix {
            shape,
            order_p,
            order_p2,
            code_type,
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn order_p_rows(&self) -> &[MixedWord] {
        &self.order_p
    }

    pub fn order_p2_rows(&self) -> &[MixedWord] {
        &self.order_p2
    }

    /// All rows, order-`p` rows first.
    pub fn rows(&self) -> impl Iterator<Item = &MixedWord> {
        self.order_p.iter().chain(&self.order_p2)
    }

    pub fn num_rows(&self) -> usize {
        self.order_p.len() + self.order_p2.len()
    }

    /// The type `(α, β; γ, δ; κ)` of the generated code.
    pub fn code_type(&self) -> CodeType {
        self.code_type
    }

    pub fn standardize(&self) -> StandardForm {
        Reduction::new(self.shape, self.rows().map(|w| w.entries())).standard_form()
    }

    /// Rows as plain integer vectors, in the order of [`rows`](Self::rows).
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.rows().map(|w| w.entries().to_vec()).collect()
    }
}

/// Upper bound on the number of codewords a brute-force pass may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCap(pub u128);

impl EnumerationCap {
    /// `3¹⁵ = 14 348 907`.
    pub const DEFAULT: EnumerationCap = EnumerationCap(14_348_907);
}

impl Default for EnumerationCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// An additive subgroup of `Z_p^α × Z_{p²}^β` with its type and a reduced
/// basis used for membership queries.
#[derive(Debug, Clone)]
pub struct AdditiveCode {
    generators: GeneratorMatrix,
    reduction: Reduction,
}

impl AdditiveCode {
    pub fn new(generators: GeneratorMatrix) -> Self {
        let reduction = Reduction::new(generators.shape, generators.rows().map(|w| w.entries()));
        AdditiveCode {
            generators,
            reduction,
        }
    }

    pub fn from_spanning_set(shape: Shape, rows: &[MixedWord]) -> Result<Self> {
        Ok(Self::new(GeneratorMatrix::from_spanning_set(shape, rows)?))
    }

    pub fn generators(&self) -> &GeneratorMatrix {
        &self.generators
    }

    pub fn shape(&self) -> Shape {
        self.generators.shape
    }

    pub fn prime(&self) -> Prime {
        self.generators.shape.p
    }

    pub fn code_type(&self) -> CodeType {
        self.generators.code_type
    }

    /// `γ + 2δ`, the base-`p` logarithm of the size.
    pub fn log_size(&self) -> usize {
        self.code_type().log_size()
    }

    /// `p^(γ+2δ)`, or `None` if it overflows `u128`.
    pub fn size(&self) -> Option<u128> {
        self.prime().pow(self.log_size())
    }

    pub fn standard_form(&self) -> StandardForm {
        self.reduction.standard_form()
    }

    pub fn contains(&self, w: &MixedWord) -> Result<bool> {
        self.shape().check(&w.shape())?;
        Ok(self.reduction.contains(w.entries()))
    }

    pub(crate) fn contains_in_place(&self, buf: &mut [u32]) -> bool {
        self.reduction.reduce_in_place(buf)
    }

    /// Same set of codewords, regardless of generators.
    pub fn same_code(&self, other: &AdditiveCode) -> bool {
        self.shape() == other.shape()
            && self.code_type() == other.code_type()
            && other
                .generators
                .rows()
                .all(|w| self.reduction.contains(w.entries()))
    }

    pub(crate) fn check_cap(&self, cap: EnumerationCap) -> Result<u128> {
        let required = self.size().unwrap_or(u128::MAX);
        if required > cap.0 {
            return Err(Error::CapExceeded {
                required,
                cap: cap.0,
            });
        }
        Ok(required)
    }

    /// Calls `f` on every codeword `Σ λᵢuᵢ + Σ νⱼvⱼ` exactly once, as a flat
    /// entry slice.
    pub fn for_each_codeword<F: FnMut(&[u32])>(&self, cap: EnumerationCap, mut f: F) -> Result<()> {
        self.check_cap(cap)?;
        let shape = self.shape();
        let q = shape.p.get();
        let rows: Vec<&[u32]> = self.generators.rows().map(|w| w.entries()).collect();
        let radix: Vec<u32> = self
            .generators
            .order_p
            .iter()
            .map(|_| q)
            .chain(self.generators.order_p2.iter().map(|_| q * q))
            .collect();
        let mut digits = vec![0u32; rows.len()];
        let mut word = vec![0u32; shape.len()];
        loop {
            f(&word);
            // odometer step: a wrapping digit adds its row for the last time,
            // which returns that row's contribution to zero
            let mut i = 0;
            loop {
                if i == rows.len() {
                    return Ok(());
                }
                shape.add_scaled_into(&mut word, rows[i], 1);
                digits[i] += 1;
                if digits[i] < radix[i] {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    /// Enumerates all codewords into a membership index.
    pub fn enumerate(&self, cap: EnumerationCap) -> Result<CodewordIndex> {
        let required = self.check_cap(cap)?;
        let shape = self.shape();
        let mut set = KeySet::with_capacity(shape.p.square(), shape.len(), required as usize);
        self.for_each_codeword(cap, |w| {
            set.insert(w);
        })?;
        Ok(CodewordIndex { shape, set })
    }
}

/// The enumerated codeword set of a code.
#[derive(Debug, Clone)]
pub struct CodewordIndex {
    shape: Shape,
    set: KeySet,
}

impl CodewordIndex {
    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.len() == 0
    }

    pub fn contains(&self, w: &MixedWord) -> Result<bool> {
        self.shape.check(&w.shape())?;
        Ok(self.set.contains(w.entries()))
    }

    pub fn contains_entries(&self, entries: &[u32]) -> bool {
        self.set.contains(entries)
    }
}

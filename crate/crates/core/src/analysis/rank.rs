use crate::analysis::{gray_of, GrayImages};
use crate::linalg::Echelon;
use crate::mixed_code::{AdditiveCode, EnumerationCap, MixedWord};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMethod {
    /// Elimination over the Gray images of the `p = 3` spanning set.
    Span,
    /// Elimination over every Gray image of the code.
    BruteForce,
}

impl RankMethod {
    pub fn name(self) -> &'static str {
        match self {
            RankMethod::Span => "span-elimination",
            RankMethod::BruteForce => "brute-force",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RankReport {
    /// Dimension of the linear span `⟨Φ(𝒞)⟩` over `Z_p`.
    pub rank: usize,
    /// `rank − (γ + 2δ)`.
    pub r_bar: usize,
    pub method: RankMethod,
    /// Empty for the brute-force method.
    pub span_generators: Vec<MixedWord>,
}

/// For `p = 3`: `uᵢ`, `vⱼ`, `3vₖ∗vₗ` for `l ≤ k`, and `3vₓ∗v_y∗v_z` for
/// `x ≤ y ≤ z`, whose Gray images span `⟨Φ(𝒞)⟩`.
pub fn span_generators_p3(code: &AdditiveCode) -> Result<Vec<MixedWord>> {
    let p = code.prime().get();
    if p != 3 {
        return Err(Error::Unsupported(format!(
            "span generators are only available for p = 3, not p = {p}"
        )));
    }
    let g = code.generators();
    let v = g.order_p2_rows();
    let d = v.len();
    let mut out: Vec<MixedWord> = g.rows().cloned().collect();
    let times3 = |w: MixedWord| w.scale(3);
    for k in 0..d {
        for l in 0..=k {
            out.push(times3(v[k].star(&v[l])?));
        }
    }
    for x in 0..d {
        for y in x..d {
            let xy = v[x].star(&v[y])?;
            for z in y..d {
                out.push(times3(xy.star(&v[z])?));
            }
        }
    }
    Ok(out)
}

pub fn rank_span(code: &AdditiveCode) -> Result<RankReport> {
    let span_generators = span_generators_p3(code)?;
    let mut e = Echelon::new(code.prime(), code.shape().gray_len());
    for w in &span_generators {
        e.insert(&gray_of(w));
    }
    Ok(report(code, e.rank(), RankMethod::Span, span_generators))
}

pub fn rank_bruteforce(code: &AdditiveCode, cap: EnumerationCap) -> Result<RankReport> {
    let images = GrayImages::new(code, cap)?;
    let mut e = Echelon::new(code.prime(), images.width);
    for g in images.iter() {
        if !e.contains(g) {
            e.insert(g);
        }
    }
    Ok(report(code, e.rank(), RankMethod::BruteForce, Vec::new()))
}

pub fn rank(code: &AdditiveCode, method: RankMethod, cap: EnumerationCap) -> Result<RankReport> {
    match method {
        RankMethod::Span => rank_span(code),
        RankMethod::BruteForce => rank_bruteforce(code, cap),
    }
}

fn report(
    code: &AdditiveCode,
    rank: usize,
    method: RankMethod,
    gens: Vec<MixedWord>,
) -> RankReport {
    let base = code.log_size();
    debug_assert!(rank >= base);
    RankReport {
        rank,
        r_bar: rank.saturating_sub(base),
        method,
        span_generators: gens,
    }
}

/// The additive code generated by the `p = 3` spanning set; its Gray image
/// spans the same space as `Φ(𝒞)`.
pub fn span_code(code: &AdditiveCode) -> Result<AdditiveCode> {
    let gens = span_generators_p3(code)?;
    AdditiveCode::from_spanning_set(code.shape(), &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{GeneratorMatrix, Prime};

    fn code(p: u32, alpha: usize, beta: usize, rows: &[Vec<u32>]) -> AdditiveCode {
        let p = Prime::new(p).unwrap();
        AdditiveCode::new(GeneratorMatrix::from_rows(p, alpha, beta, rows).unwrap())
    }

    #[test]
    fn spanning_set_sizes() {
        let c = code(3, 1, 2, &[vec![1, 0, 3], vec![0, 3, 0]]);
        assert_eq!(span_generators_p3(&c).unwrap().len(), 2);
        let c = code(3, 0, 1, &[vec![1]]);
        assert_eq!(span_generators_p3(&c).unwrap().len(), 3);
        assert!(matches!(
            span_generators_p3(&code(5, 0, 1, &[vec![1]])),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn whole_ring_is_linear() {
        // Φ(Z_9) is all of Z_3^3
        let c = code(3, 0, 1, &[vec![1]]);
        let r = rank_span(&c).unwrap();
        assert_eq!((r.rank, r.r_bar), (2, 0));
        assert_eq!(
            rank_bruteforce(&c, EnumerationCap::DEFAULT).unwrap().rank,
            2
        );
    }

    #[test]
    fn nonlinear_pair_of_columns() {
        // v = (1, 1): its images span more than its size
        let c = code(3, 0, 2, &[vec![1, 1]]);
        let span = rank_span(&c).unwrap();
        let brute = rank_bruteforce(&c, EnumerationCap::DEFAULT).unwrap();
        assert_eq!(span.rank, brute.rank);
        let c = code(3, 0, 3, &[vec![1, 0, 1], vec![0, 1, 1]]);
        let span = rank_span(&c).unwrap();
        let brute = rank_bruteforce(&c, EnumerationCap::DEFAULT).unwrap();
        assert_eq!(span.rank, brute.rank);
        assert_eq!(span.r_bar, 1);
        assert_eq!(span_code(&c).unwrap().code_type().gamma, 1);
    }
}

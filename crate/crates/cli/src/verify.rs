use std::io::Write;

use mixcode::analysis::{
    coset_decomposition_check, is_gray_linear, is_gray_linear_bruteforce, kernel_bruteforce,
    kernel_code, kernel_coset, kernel_coset_via_carries, min_hamming_distance, rank_bruteforce,
    rank_span,
};
use mixcode::constructions::{kernel_range, rank_range};
use mixcode::gray::gray_weight;
use mixcode::{AdditiveCode, EnumerationCap, MixedWord};

use crate::{load_code, CliError, CliResult, VerifyArgs};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
}

impl Outcome {
    fn from_check(r: mixcode::Result<Result<(), String>>) -> Self {
        match r {
            Ok(Ok(())) => Outcome::Pass,
            Ok(Err(msg)) => Outcome::Fail(msg),
            Err(e @ (mixcode::Error::CapExceeded { .. } | mixcode::Error::Unsupported(_))) => {
                Outcome::Skipped(e.to_string())
            }
            Err(e) => Outcome::Fail(e.to_string()),
        }
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, a: T, b: T) -> Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{what}: {a:?} != {b:?}"))
    }
}

/// Runs every cross-check on `code`, in a fixed order.
pub fn run_checks(code: &AdditiveCode, cap: EnumerationCap) -> Vec<(&'static str, Outcome)> {
    let t = code.code_type();
    let mut out = Vec::new();
    let mut check = |name: &'static str, f: &dyn Fn() -> mixcode::Result<Result<(), String>>| {
        out.push((name, Outcome::from_check(f())));
    };

    check("standard_form", &|| {
        let sf = code.standard_form();
        let permuted = AdditiveCode::new(sf.matrix.clone());
        let mut same = permuted.code_type() == t;
        for w in code.generators().rows() {
            same &= permuted.contains(&sf.permute_word(w))?;
        }
        Ok(
            expect_eq("permuted code equals standard form span", same, true).and(expect_eq(
                "type",
                sf.code_type,
                t,
            )),
        )
    });
    check("dual", &|| {
        let dual = code.dual();
        Ok(
            expect_eq("dual type", dual.code_type(), t.dual()).and(expect_eq(
                "bidual",
                dual.dual().same_code(code),
                true,
            )),
        )
    });
    check("rank", &|| {
        let span = rank_span(code)?;
        let brute = rank_bruteforce(code, cap)?;
        Ok(expect_eq("span vs brute force", span.rank, brute.rank))
    });
    check("rank_bounds", &|| {
        let r = match rank_span(code) {
            Ok(r) => r,
            Err(mixcode::Error::Unsupported(_)) => rank_bruteforce(code, cap)?,
            Err(e) => return Err(e),
        };
        let range = rank_range(t)?;
        Ok(if range.contains(&r.rank) {
            Ok(())
        } else {
            Err(format!("rank {} outside {range:?}", r.rank))
        })
    });
    check("kernel", &|| {
        let coset = kernel_coset(code, cap)?;
        let carries = kernel_coset_via_carries(code, cap)?;
        Ok(expect_eq(
            "Gray translates vs carries",
            coset.kernel_dim,
            carries.kernel_dim,
        )
        .and(expect_eq(
            "coset exponents",
            &coset.coset_exponents,
            &carries.coset_exponents,
        )))
    });
    check("kernel_bruteforce", &|| {
        let carries = kernel_coset_via_carries(code, cap)?;
        let brute = kernel_bruteforce(code, cap)?;
        Ok(expect_eq(
            "carries vs brute force",
            carries.kernel_dim,
            brute.kernel_dim,
        )
        .and(expect_eq(
            "coset exponents",
            &carries.coset_exponents,
            &brute.coset_exponents,
        )))
    });
    check("kernel_bounds", &|| {
        let k = kernel_coset_via_carries(code, cap)?;
        let range = kernel_range(t)?;
        let kc = kernel_code(code, &k)?;
        let contained = kc
            .generators()
            .rows()
            .all(|w| code.contains(w).unwrap_or(false));
        Ok(if !range.contains(&k.kernel_dim) {
            Err(format!(
                "kernel dimension {} outside {range:?}",
                k.kernel_dim
            ))
        } else {
            expect_eq("kernel code inside code", contained, true)
        })
    });
    check("coset_decomposition", &|| {
        let k = kernel_coset_via_carries(code, cap)?;
        Ok(expect_eq(
            "partition",
            coset_decomposition_check(code, &k, cap)?,
            true,
        ))
    });
    check("linearity", &|| {
        let fast = is_gray_linear(code, cap)?;
        let k = kernel_coset_via_carries(code, cap)?;
        Ok(expect_eq(
            "linear iff kernel is everything",
            fast,
            k.k_bar == 0,
        ))
    });
    check("linearity_bruteforce", &|| {
        let fast = is_gray_linear(code, cap)?;
        let brute = is_gray_linear_bruteforce(code, cap)?;
        Ok(expect_eq("residue pairs vs brute force", fast, brute))
    });
    check("isometry", &|| {
        let d = min_hamming_distance(code, cap)?;
        let shape = code.shape();
        let mut best: Option<u32> = None;
        code.for_each_codeword(cap, |c| {
            if c.iter().any(|&x| x != 0) {
                let (x, y) = c.split_at(shape.alpha);
                let w = MixedWord::new(shape.p, x, y).expect("codeword in range");
                let wt = gray_weight(&w);
                best = Some(best.map_or(wt, |b| b.min(wt)));
            }
        })?;
        Ok(expect_eq(
            "min Hamming distance vs min homogeneous weight",
            d,
            best,
        ))
    });
    out
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let code = AdditiveCode::new(load_code(&a.file)?);
    writeln!(out, "type: {}", code.code_type())?;
    let results = run_checks(&code, EnumerationCap(a.cap));
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Outcome::Pass => writeln!(out, "{name}: pass")?,
            Outcome::Fail(msg) => {
                failed += 1;
                writeln!(out, "{name}: fail ({msg})")?
            }
            Outcome::Skipped(msg) => writeln!(out, "{name}: skipped ({msg})")?,
        }
    }
    if failed > 0 {
        Err(CliError::CheckFailed(format!("{failed} check(s) failed")))
    } else {
        Ok(())
    }
}

//! Worked examples: rank witnesses for type (2,10;2,4;1), kernel
//! witnesses for type (α,9;2,5;1), and the (r, k) table for (2,14;2,6;1).

use mixcode::analysis::{
    coset_decomposition_check, is_gray_linear, kernel_bruteforce, kernel_code, kernel_coset,
    kernel_coset_via_carries, rank_bruteforce, rank_span, span_code, span_generators_p3,
};
use mixcode::constructions::{
    construct_kernel_code, construct_pair_code, construct_rank_code, AchievabilityTable,
};
use mixcode::{AdditiveCode, CodeType, EnumerationCap, GeneratorMatrix, Prime};

const CAP: EnumerationCap = EnumerationCap::DEFAULT;

fn ty(a: usize, b: usize, g: usize, d: usize, k: usize) -> CodeType {
    CodeType::new(a, b, g, d, k).unwrap()
}

fn p3() -> Prime {
    Prime::new(3).unwrap()
}

#[test]
fn rank_witnesses_for_type_2_10_2_4_1() {
    let t = ty(2, 10, 2, 4, 1);
    for r in 10..=15 {
        let code = AdditiveCode::new(construct_rank_code(t, r).unwrap());
        assert_eq!(code.code_type(), t);
        let span = rank_span(&code).unwrap();
        let brute = rank_bruteforce(&code, CAP).unwrap();
        assert_eq!(span.rank, r);
        assert_eq!(brute.rank, r);
        assert_eq!(span.r_bar, r - 10);
    }
    // the spanning set has at most γ + δ + C(5,2) + C(6,3) = 36 words
    let code = AdditiveCode::new(construct_rank_code(t, 15).unwrap());
    assert!(span_generators_p3(&code).unwrap().len() <= 36);
}

#[test]
fn span_codes_gain_order_p_generators() {
    let t = ty(2, 10, 2, 4, 1);
    let c11 = AdditiveCode::new(construct_rank_code(t, 11).unwrap());
    assert_eq!(span_code(&c11).unwrap().code_type(), ty(2, 10, 3, 4, 1));
    let c15 = AdditiveCode::new(construct_rank_code(t, 15).unwrap());
    assert_eq!(span_code(&c15).unwrap().code_type(), ty(2, 10, 7, 4, 1));
    let c10 = AdditiveCode::new(construct_rank_code(t, 10).unwrap());
    assert!(span_code(&c10).unwrap().same_code(&c10));
}

#[test]
fn kernel_witnesses_for_type_2_9_2_5_1() {
    let t = ty(2, 9, 2, 5, 1);
    for k in 7..=12 {
        let g = construct_kernel_code(p3(), t, k).unwrap();
        let sf = g.standardize();
        let k_bar = 12 - k;
        for (i, row) in sf.s().iter().enumerate() {
            let fill = if i < k_bar { 2 } else { 0 };
            assert_eq!(row, &vec![fill; 3]);
        }
        let code = AdditiveCode::new(g);
        let coset = kernel_coset(&code, CAP).unwrap();
        assert_eq!(coset.kernel_dim, k);
        assert_eq!(kernel_coset_via_carries(&code, CAP).unwrap(), coset);
        assert_eq!(is_gray_linear(&code, CAP).unwrap(), k == 12);
        let kc = kernel_code(&code, &coset).unwrap();
        assert_eq!(kc.code_type(), ty(2, 9, 2 + k_bar, 5 - k_bar, 1));
    }
}

#[test]
fn coset_decomposition_for_k_11() {
    let t = ty(2, 9, 2, 5, 1);
    let code = AdditiveCode::new(construct_kernel_code(p3(), t, 11).unwrap());
    let report = kernel_coset(&code, CAP).unwrap();
    assert_eq!(report.k_bar, 1);
    assert!(coset_decomposition_check(&code, &report, CAP).unwrap());
}

#[test]
fn scaled_down_kernel_witnesses_by_brute_force() {
    let t = ty(2, 6, 1, 3, 1);
    for p in [3, 5] {
        let p = Prime::new(p).unwrap();
        for k in 4..=7 {
            let code = AdditiveCode::new(construct_kernel_code(p, t, k).unwrap());
            let brute = kernel_bruteforce(&code, CAP).unwrap();
            assert_eq!(brute.kernel_dim, k, "p={p} k={k}");
            assert_eq!(kernel_coset(&code, CAP).unwrap().kernel_dim, k);
        }
    }
}

#[test]
fn table_one_verifies() {
    let table = AchievabilityTable::new(ty(2, 14, 2, 6, 1)).unwrap();
    let checks = table.verify(CAP).unwrap();
    assert_eq!(checks.len(), 1 + 1 + 5 + 4 * 7);
    for c in &checks {
        assert!(c.ok(), "{c:?}");
    }
}

#[test]
fn example_pair_witnesses() {
    let t = ty(2, 14, 2, 6, 1);
    let s = construct_pair_code(t, 15, 10).unwrap().standardize().s();
    assert_eq!(
        s.iter().map(|r| r[0]).collect::<Vec<_>>(),
        vec![2, 2, 2, 2, 0, 0]
    );
    assert!(s.iter().all(|r| r[1..].iter().all(|&e| e == 0)));
    assert!(construct_pair_code(t, 15, 13).is_ok());
    assert!(construct_pair_code(t, 16, 13).is_err());
}

#[test]
fn single_row_codes() {
    let g = GeneratorMatrix::from_rows(p3(), 1, 1, &[vec![1, 0]]).unwrap();
    let code = AdditiveCode::new(g);
    assert_eq!(rank_span(&code).unwrap().rank, 1);
    assert_eq!(kernel_coset(&code, CAP).unwrap().kernel_dim, 1);
}

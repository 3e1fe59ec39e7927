use pauli_constraints::permutations::Permutation;
use pauli_constraints::polyring::{builtin_schubert_table, schubert, schubert_polynomial, verify_schubert_table, SparsePoly};

#[test]
fn s4_table_matches_except_one_refuted_row() {
    let table = builtin_schubert_table();
    assert_eq!(table.rows.len(), 24);
    let report = verify_schubert_table(&table).unwrap();
    let mismatched: Vec<_> = report.iter().filter(|r| !r.literal_match).collect();
    assert_eq!(mismatched.len(), 1);
    let bad = mismatched[0];
    assert_eq!(bad.w, "0321");
    assert_eq!(bad.printed, "x^2y+x^2z+xy^2");
    assert!(bad.refutations.iter().any(|s| s.contains("∂1")), "{:?}", bad.refutations);
    let expected = SparsePoly::parse("x^2y+x^2z+xy^2+xyz+y^2z").unwrap();
    assert_eq!(schubert(&Permutation::parse_one_line("0321").unwrap()), expected);
}

#[test]
fn s4_table_by_definition() {
    for row in builtin_schubert_table().rows {
        let w = Permutation::parse_one_line(&row.w).unwrap();
        assert_eq!(schubert_polynomial(&w, 4).unwrap(), schubert(&w), "{}", row.w);
    }
}

#[test]
fn anchor_row() {
    let w = Permutation::parse_one_line("1032").unwrap();
    assert_eq!(schubert(&w), SparsePoly::parse("x^2+xy+xz").unwrap());
    assert_eq!(schubert(&Permutation::identity()), SparsePoly::one());
}

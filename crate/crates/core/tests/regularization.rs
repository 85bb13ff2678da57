use dzrel_core::linalg::Matrix;
use dzrel_core::poly::shuffle;
use dzrel_core::regularization::{
    convergent_words, fz_quotient_dim, sh_basis_dim, shuffle_regularize, shuffle_regularize_poly,
    stuffle_relation, FormalZetaCombo,
};
use dzrel_core::{QPoly, Rational, Word};
use num_traits::{One, Zero};

fn all_words_up_to(n: usize) -> Vec<Word> {
    (0..=n).flat_map(Word::all_of_length).collect()
}

#[test]
fn regularization_descends_to_shuffle_product() {
    let words = all_words_up_to(6);
    for &u in &words {
        for &v in &words {
            if u.len() + v.len() > 6 {
                continue;
            }
            let lhs = shuffle_regularize_poly(&shuffle::<Rational>(u, v));
            let rhs = shuffle_regularize(u).product(&shuffle_regularize(v));
            assert_eq!(lhs, rhs, "u = {u}, v = {v}");
        }
    }
}

#[test]
fn convergent_words_are_fixed() {
    for w in all_words_up_to(8).into_iter().filter(|w| !w.is_empty() && w.is_convergent()) {
        assert_eq!(shuffle_regularize(w), FormalZetaCombo::symbol(w).unwrap());
    }
}

#[test]
fn euler_relation_in_weight_three_span() {
    let q = fz_quotient_dim(3).unwrap();
    let euler = QPoly::from_terms([
        ("xyy".parse().unwrap(), Rational::one()),
        ("xxy".parse().unwrap(), -Rational::one()),
    ]);
    let symbols = convergent_words(3);
    let mut rows: Vec<Vec<Rational>> =
        q.relations.iter().map(|r| symbols.iter().map(|w| r.coeff(*w)).collect()).collect();
    let before = Matrix::from_rows(rows.clone(), symbols.len()).unwrap().rank();
    rows.push(symbols.iter().map(|w| euler.coeff(*w)).collect());
    assert_eq!(Matrix::from_rows(rows, symbols.len()).unwrap().rank(), before);
}

// Dense rank over every ordered pair, independent of the incremental reducer.
fn dense_quotient_dim(n: usize) -> usize {
    let symbols = convergent_words(n);
    let ending_in_y: Vec<Word> = all_words_up_to(n).into_iter().filter(|w| w.ends_in_y()).collect();
    let mut rows = Vec::new();
    for &u in &ending_in_y {
        for &v in &ending_in_y {
            if u.len() + v.len() == n {
                let rel = stuffle_relation(u, v).unwrap();
                assert!(rel.scalar().is_zero());
                rows.push(symbols.iter().map(|w| rel.coeff(*w)).collect());
            }
        }
    }
    symbols.len() - Matrix::from_rows(rows, symbols.len()).unwrap().rank()
}

#[test]
fn quotient_dimension_weight_four() {
    let q = fz_quotient_dim(4).unwrap();
    assert_eq!(q.dim, dense_quotient_dim(4));
    assert_eq!(q.dim, 1);
}

#[test]
fn quotient_dimensions_through_weight_eight() {
    let dims: Vec<usize> = (2..=8).map(|n| fz_quotient_dim(n).unwrap().dim).collect();
    assert_eq!(dims, vec![1, 1, 1, 2, 2, 3, 4]);
    assert_eq!(dense_quotient_dim(6), 2);
}

#[test]
fn sh_dimension_is_power_of_two() {
    for n in 2..=8 {
        assert_eq!(sh_basis_dim(n).unwrap(), 1 << (n - 2), "n = {n}");
    }
    assert!(sh_basis_dim(1).is_err());
    assert!(sh_basis_dim(9).is_err());
}

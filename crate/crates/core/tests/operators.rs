use kupershmidt::catalog::RepChoice;
use kupershmidt::deformation::{
    check_deformation_pair, check_trivial_equivalence, trivial_deformation_from_pair,
};
use kupershmidt::operators::{
    check_pre_lie, is_dual_nijenhuis_pair, is_kupershmidt, is_nijenhuis, is_nijenhuis_pair,
    is_rota_baxter, nijenhuis_pair_semidirect_test, pre_lie_product, sub_adjacent_bracket,
};
use kupershmidt::{get_entry, Bracket, LieAlgebra, Matrix, Rational, Representation};
use proptest::prelude::*;

fn matrix(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(lo..=hi, n * n).prop_map(move |xs| {
        let rows: Vec<Vec<i64>> = xs.chunks(n).map(|c| c.to_vec()).collect();
        Matrix::from_ints(&rows)
    })
}

fn entry(name: &str, choice: RepChoice) -> (LieAlgebra, Representation) {
    let e = get_entry(name).unwrap();
    let rho = e.representation(choice).clone();
    (e.algebra, rho)
}

fn every_matrix(n: usize, values: &[i64]) -> Vec<Matrix> {
    let slots = n * n;
    let total = values.len().pow(slots as u32);
    (0..total)
        .map(|mut idx| {
            let mut xs = Vec::with_capacity(slots);
            for _ in 0..slots {
                xs.push(values[idx % values.len()]);
                idx /= values.len();
            }
            let rows: Vec<Vec<i64>> = xs.chunks(n).map(|c| c.to_vec()).collect();
            Matrix::from_ints(&rows)
        })
        .collect()
}

/// Kupershmidt operators for the adjoint action are Rota-Baxter operators.
#[test]
fn adjoint_kupershmidt_is_rota_baxter() {
    for name in ["aff1", "abelian_2"] {
        let (g, ad) = entry(name, RepChoice::Adjoint);
        for r in every_matrix(2, &[-1, 0, 1, 2]) {
            assert_eq!(
                is_kupershmidt(&g, &ad, &r).unwrap().passed(),
                is_rota_baxter(&g, &r).unwrap().passed(),
                "{name}: R = {r}"
            );
        }
    }
}

#[test]
fn every_endomorphism_of_aff1_is_nijenhuis() {
    let (g, _) = entry("aff1", RepChoice::Adjoint);
    for n in every_matrix(2, &[-2, -1, 0, 1, 3]) {
        assert!(is_nijenhuis(&g, &n).unwrap().passed(), "N = {n}");
    }
}

#[test]
fn aff1_pairs_exhaustive() {
    let (g, ad) = entry("aff1", RepChoice::Adjoint);
    let coad = ad.dual();
    let ns = every_matrix(2, &[-1, 0, 1]);
    let ss = every_matrix(2, &[0, 1]);
    let mut pairs = 0;
    for n in &ns {
        for s in &ss {
            let pair = is_nijenhuis_pair(&g, &ad, n, s).unwrap().passed();
            let dual = is_dual_nijenhuis_pair(&g, &coad, n, &s.transpose())
                .unwrap()
                .passed();
            assert_eq!(pair, dual, "N = {n}, S = {s}");
            let sd = nijenhuis_pair_semidirect_test(&g, &ad, n, s).unwrap();
            assert_eq!(pair, sd.holds("semidirect_nijenhuis"), "N = {n}, S = {s}");
            if pair {
                pairs += 1;
            }
        }
    }
    assert!(pairs > 0 && pairs < ns.len() * ss.len());
}

#[test]
fn pre_lie_product_of_a_kupershmidt_operator() {
    let e = get_entry("heis3").unwrap();
    let bundle = e.bundle("kn_coadjoint").unwrap();
    let coad = e.representation(bundle.representation);
    let t = bundle.operators.t.as_ref().unwrap();
    assert!(is_kupershmidt(&e.algebra, coad, t).unwrap().passed());
    let p = pre_lie_product(coad, t).unwrap();
    assert!(check_pre_lie(&p).passed());
    let sub = sub_adjacent_bracket(coad, t).unwrap();
    assert_eq!(p.commutator(), sub);
    assert!(sub.check_jacobi().passed());
}

proptest! {
    #[test]
    fn scalar_shift_preserves_nijenhuis(n in matrix(3, -1, 1), c in -3i64..=3) {
        let (g, _) = entry("heis3", RepChoice::Adjoint);
        let shifted = &n + &Matrix::scalar(3, &Rational::from(c));
        prop_assert_eq!(
            is_nijenhuis(&g, &n).unwrap().passed(),
            is_nijenhuis(&g, &shifted).unwrap().passed()
        );
    }

    #[test]
    fn pair_transpose_duality_heis3(n in matrix(3, -1, 1), s in matrix(3, -1, 1)) {
        let (g, ad) = entry("heis3", RepChoice::Adjoint);
        let coad = ad.dual();
        let st = s.transpose();
        prop_assert_eq!(
            is_nijenhuis_pair(&g, &ad, &n, &s).unwrap().passed(),
            is_dual_nijenhuis_pair(&g, &coad, &n, &st).unwrap().passed()
        );
        prop_assert_eq!(
            is_dual_nijenhuis_pair(&g, &ad, &n, &s).unwrap().passed(),
            is_nijenhuis_pair(&g, &coad, &n, &st).unwrap().passed()
        );
    }

    #[test]
    fn pair_iff_semidirect_nijenhuis(n in matrix(3, 0, 1), s in matrix(3, 0, 1)) {
        let (g, coad) = entry("heis3", RepChoice::Coadjoint);
        let pair = is_nijenhuis_pair(&g, &coad, &n, &s).unwrap().passed();
        let sd = g.semidirect_product(&coad).unwrap();
        let direct = is_nijenhuis(&sd, &n.direct_sum(&s)).unwrap().passed();
        prop_assert_eq!(pair, direct);
    }

    #[test]
    fn deformed_bracket_is_lie_for_nijenhuis(n in matrix(3, -1, 1)) {
        let (g, _) = entry("heis3", RepChoice::Adjoint);
        if is_nijenhuis(&g, &n).unwrap().passed() {
            let deformed: Bracket = g.deformed(&n).unwrap();
            prop_assert!(deformed.check_jacobi().passed());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pairs_generate_trivial_deformations(a in -2i64..=2, b in -2i64..=2, c in -2i64..=2) {
        let (g, ad) = entry("aff1", RepChoice::Adjoint);
        let n = Matrix::from_ints(&[[a, b], [0, c]]);
        for s in every_matrix(2, &[-1, 0, 1]) {
            if !is_nijenhuis_pair(&g, &ad, &n, &s).unwrap().passed() {
                continue;
            }
            let d = trivial_deformation_from_pair(&g, &ad, &n, &s).unwrap();
            prop_assert!(check_deformation_pair(&g, &ad, &d).unwrap().passed());
            prop_assert!(check_trivial_equivalence(&g, &ad, &n, &s, &d).unwrap().passed());
        }
    }
}

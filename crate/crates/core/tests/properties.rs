#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;

use tqchar::fm::{fm_expand, DEFAULT_MAX_MONOMIALS};
use tqchar::format::{character_from_json, character_to_json};
use tqchar::kl::{kl_solve, mat_bar, mat_mul, simple_qchar_t1, u_matrix, KLTables, PolyMatrix};
use tqchar::tensor::{twisted_product, DrinfeldSpec};
use tqchar::ymonomial::{a_inverse_product, factor_ratio, leq, ExponentMap, Var};
use tqchar::{DominantMonomial, DynkinDiagram, Engine, Monomial, QCharacter, Spectral, TPoly};

fn tpoly() -> impl Strategy<Value = TPoly> {
    prop::collection::vec((-6i32..=6, -5i64..=5), 0..6).prop_map(TPoly::from_terms)
}

fn diagram() -> impl Strategy<Value = DynkinDiagram> {
    prop::sample::select(vec!["A1", "A2", "A3", "A4", "D4", "D5", "E6"])
        .prop_map(|s| s.parse().unwrap())
}

fn exponent_map(rank: usize) -> impl Strategy<Value = ExponentMap> {
    prop::collection::btree_map(
        (1..=rank, 0u32..2, -4i32..6).prop_map(|(k, o, n)| Var::new(k, o, n)),
        0i32..3,
        0..5,
    )
    .prop_map(|m| m.into_iter().filter(|(_, x)| *x != 0).collect())
}

fn dominant(rank: usize) -> impl Strategy<Value = DominantMonomial> {
    prop::collection::btree_map(
        (1..=rank, 0u32..2, -3i32..4).prop_map(|(k, o, n)| Var::new(k, o, n)),
        1i32..3,
        0..4,
    )
    .prop_map(|m| DominantMonomial::new(Monomial::from_map(m)).unwrap())
}

/// Small standard modules in a single orbit of a small diagram.
fn small_standard() -> impl Strategy<Value = (DynkinDiagram, DominantMonomial)> {
    prop::sample::select(vec!["A1", "A2", "A3"]).prop_flat_map(|s| {
        let d: DynkinDiagram = s.parse().unwrap();
        let rank = d.rank();
        prop::collection::vec((1..=rank, 0i32..5), 1..=3).prop_map(move |f| {
            let m = f
                .iter()
                .fold(Monomial::one(), |acc, &(k, n)| acc.mul(&Monomial::y(k, Spectral::new(0, n))));
            (d.clone(), DominantMonomial::new(m).unwrap())
        })
    })
}

proptest! {
    #[test]
    fn tpoly_ring_axioms(a in tpoly(), b in tpoly(), c in tpoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, TPoly::zero());
        prop_assert_eq!(&a * &TPoly::one(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
    }

    #[test]
    fn tpoly_negative_part_and_json(a in tpoly()) {
        let rest = &a - &a.negative_part();
        prop_assert!(rest.is_polynomial());
        prop_assert!(a.negative_part().max_exponent().is_none_or(|e| e < 0));
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<TPoly>(&s).unwrap(), a);
    }

    #[test]
    fn factor_ratio_inverts_a_products(
        (d, top, v) in diagram().prop_flat_map(|d| {
            let r = d.rank();
            (Just(d), dominant(r), exponent_map(r))
        })
    ) {
        let m = top.monomial().mul(&a_inverse_product(&d, &v));
        prop_assert_eq!(factor_ratio(&d, &m, top.monomial()), Some(v.clone()));
        prop_assert!(leq(&d, &m, top.monomial()));
        if !v.is_empty() {
            prop_assert!(!leq(&d, top.monomial(), &m));
        }
    }

    #[test]
    fn leq_is_a_partial_order(
        (d, top, v1, v2) in diagram().prop_flat_map(|d| {
            let r = d.rank();
            (Just(d), dominant(r), exponent_map(r), exponent_map(r))
        })
    ) {
        let a = top.monomial().clone();
        let b = a.mul(&a_inverse_product(&d, &v1));
        let c = b.mul(&a_inverse_product(&d, &v2));
        prop_assert!(leq(&d, &a, &a));
        prop_assert!(leq(&d, &c, &b) && leq(&d, &b, &a) && leq(&d, &c, &a));
        if leq(&d, &a, &b) {
            prop_assert_eq!(&a, &b);
        }
    }

    #[test]
    fn monomial_text_round_trip(m in exponent_map(5)) {
        let m = Monomial::from_map(m);
        prop_assert_eq!(m.render(true).parse::<Monomial>().unwrap(), m.clone());
        if m.orbits().iter().all(|&o| o == 0) {
            prop_assert_eq!(m.to_string().parse::<Monomial>().unwrap(), m);
        }
    }

    #[test]
    fn drinfeld_spec_round_trip(p in dominant(4)) {
        let s = DrinfeldSpec(p.clone());
        prop_assert_eq!(s.to_string().parse::<DrinfeldSpec>().unwrap(), s.clone());
        let json = serde_json::to_string(&s.factors()).unwrap();
        prop_assert_eq!(DrinfeldSpec::parse_any(&json).unwrap(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fundamental_is_shift_equivariant(
        d in prop::sample::select(vec!["A1", "A2", "A3", "D4"]),
        node in 1usize..5,
        n in -6i32..6,
    ) {
        let d: DynkinDiagram = d.parse().unwrap();
        let node = 1 + (node - 1) % d.rank();
        let at0 = fm_expand(&d, &DominantMonomial::fundamental(node, Spectral::new(0, 0)), DEFAULT_MAX_MONOMIALS).unwrap();
        let atn = fm_expand(&d, &DominantMonomial::fundamental(node, Spectral::new(0, n)), DEFAULT_MAX_MONOMIALS).unwrap();
        prop_assert_eq!(at0.shift(n), atn);
    }

    #[test]
    fn standard_characters_are_well_formed((d, p) in small_standard()) {
        let e = Engine::new(d.clone());
        let chi = e.standard(&p).unwrap();
        chi.validate().unwrap();
        // modified coefficients are polynomials with nonzero constant term
        let tilde = chi.tilde().unwrap();
        prop_assert!(tilde.terms().values().all(|c| c.min_exponent() == Some(0)));
        // t = 1 is multiplicative over the factors
        let mut plain = QCharacter::trivial(d.clone());
        for &(v, x) in p.monomial().factors() {
            for _ in 0..x {
                plain = plain.mul_plain(&e.fundamental(v.vertex, v.at).unwrap().at_t1());
            }
        }
        prop_assert_eq!(chi.at_t1(), plain);
        let json = character_to_json(&chi);
        prop_assert_eq!(character_from_json(&json).unwrap(), chi);
    }

    #[test]
    fn dimension_depends_only_on_nodes((d, p) in small_standard(), shifts in prop::collection::vec(0i32..7, 3)) {
        let e = Engine::new(d);
        let moved = Monomial::from_factors(
            p.monomial()
                .factors()
                .iter()
                .enumerate()
                .map(|(i, &(v, x))| (Var::new(v.vertex, 1 + i as u32, v.at.step + shifts[i % 3]), x)),
        );
        let dim = |chi: QCharacter| chi.terms().values().map(TPoly::eval_one).sum::<i64>();
        let a = dim(e.standard(&p).unwrap());
        let b = dim(e.standard(&DominantMonomial::new(moved).unwrap()).unwrap());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn equal_steps_commute(
        d in prop::sample::select(vec!["A2", "A3", "D4"]),
        n in 0i32..3,
        k1 in 1usize..5,
        k2 in 1usize..5,
    ) {
        let d: DynkinDiagram = d.parse().unwrap();
        let (k1, k2) = (1 + (k1 - 1) % d.rank(), 1 + (k2 - 1) % d.rank());
        let e = Engine::new(d);
        let top = e.fundamental(k1, Spectral::new(0, n + 2)).unwrap();
        let a = e.fundamental(k1, Spectral::new(0, n)).unwrap();
        let b = e.fundamental(k2, Spectral::new(0, n)).unwrap();
        let x = twisted_product(&[top.clone(), a.clone(), b.clone()]).unwrap();
        let y = twisted_product(&[top, b, a]).unwrap();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn kl_tables_are_consistent((d, p) in small_standard()) {
        let e = Engine::new(d);
        let t = KLTables::build(&e, &p).unwrap();
        let n = t.len();
        let id: PolyMatrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { TPoly::one() } else { TPoly::zero() }).collect())
            .collect();
        prop_assert_eq!(mat_mul(t.c(), t.c_inv()), id.clone());
        prop_assert_eq!(mat_mul(t.c_inv(), t.c()), id.clone());
        prop_assert_eq!(mat_mul(&mat_bar(t.u()), t.u()), id);
        for i in 0..n {
            prop_assert!(t.z()[i][i].is_one());
            for j in 0..n {
                if i != j {
                    let z = &t.z()[i][j];
                    prop_assert!(z.max_exponent().is_none_or(|x| x < 0));
                    prop_assert!(z.eval_one() >= 0);
                    prop_assert!(z.terms().all(|(_, c)| c > 0));
                }
            }
        }
        let l = simple_qchar_t1(&e, &p).unwrap();
        prop_assert!(l.coeff(p.monomial()).is_one());
        prop_assert!(l.terms().values().all(|c| c.eval_one() > 0));
    }

    #[test]
    fn u_is_bar_unitary_on_random_triangular(
        entries in prop::collection::vec(tpoly(), 6),
    ) {
        let n = 4;
        let mut c: PolyMatrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { TPoly::one() } else { TPoly::zero() }).collect())
            .collect();
        let mut it = entries.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                c[i][j] = it.next().unwrap();
            }
        }
        let u = u_matrix(&c).unwrap();
        let id: PolyMatrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { TPoly::one() } else { TPoly::zero() }).collect())
            .collect();
        prop_assert_eq!(mat_mul(&mat_bar(&u), &u), id);
        let z = kl_solve(&u).unwrap();
        // Z = bar(Z) u
        prop_assert_eq!(mat_mul(&mat_bar(&z), &u), z.clone());
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    prop_assert!(z[i][j].max_exponent().is_none_or(|x| x < 0));
                }
            }
        }
    }
}

#[test]
fn coefficients_nonnegative_on_fundamentals() {
    for (d, ranks) in [("A4", 4), ("D5", 5), ("E6", 1)] {
        let d: DynkinDiagram = d.parse().unwrap();
        let e = Engine::new(d);
        for k in 1..=ranks {
            let chi = e.fundamental(k, Spectral::new(0, 0)).unwrap();
            chi.validate().unwrap();
            assert!(chi.tilde().unwrap().terms().values().all(|c| c.is_polynomial()));
        }
    }
}

#[test]
fn e6_node1_is_minuscule() {
    let e = Engine::new("E6".parse().unwrap());
    let chi = e.fundamental(1, Spectral::new(0, 0)).unwrap();
    assert_eq!(chi.len(), 27);
    assert!(chi.terms().values().all(TPoly::is_one));
}

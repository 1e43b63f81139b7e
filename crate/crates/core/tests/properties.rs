use proptest::prelude::*;

use hasse_l2::ffield::{construct_field, poly_roots, Embedding, Field, FieldElement, Poly};
use hasse_l2::legendre::deuring_polynomial;
use hasse_l2::lucas::{lucas_binom, BaseP};
use hasse_l2::pseries::{TruncatedSeries, Valuation};

fn field(p: u32, m: usize) -> Field {
    construct_field(p, m).unwrap()
}

fn element(f: &Field, index: u64) -> FieldElement {
    FieldElement::from_index(f, index % f.order())
}

fn series(f: &Field, coeffs: &[u64]) -> TruncatedSeries {
    TruncatedSeries::new(f, coeffs.iter().map(|&c| element(f, c)).collect())
}

proptest! {
    #[test]
    fn field_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>(), which in 0usize..4) {
        let f = [field(7, 1), field(13, 2), field(5, 4), field(11, 4)][which].clone();
        let (a, b, c) = (element(&f, a), element(&f, b), element(&f, c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn roots_persist_under_embedding(coeffs in prop::collection::vec(0u64..625, 2..5), lead in 1u64..25) {
        let f2 = field(5, 2);
        let f4 = field(5, 4);
        let mut c: Vec<FieldElement> = coeffs.iter().map(|&x| element(&f2, x)).collect();
        c.push(element(&f2, lead));
        let poly = Poly::new(&f2, c);
        let small = poly_roots(&poly, &f2).unwrap();
        let large = poly_roots(&poly, &f4).unwrap();
        let e = Embedding::canonical(&f2, &f4).unwrap();
        for r in small {
            prop_assert!(large.contains(&e.apply(&r).unwrap()));
        }
    }

    #[test]
    fn series_pow_is_additive(tail in prop::collection::vec(0u64..13, 1..12), t in 0u64..40, u in 0u64..40) {
        let f = field(13, 1);
        let mut c = vec![1];
        c.extend(tail);
        let s = series(&f, &c);
        prop_assert_eq!(s.pow(t).unwrap().mul(&s.pow(u).unwrap()), s.pow(t + u).unwrap());
    }

    #[test]
    fn series_sqrt_squares_back(tail in prop::collection::vec(0u64..49, 1..10), c0 in 1u64..49) {
        let f = field(7, 2);
        let mut c = vec![c0];
        c.extend(tail);
        let s = series(&f, &c);
        // a square of a unit series always has a root
        let sq = s.mul(&s);
        let r = sq.sqrt().unwrap();
        prop_assert_eq!(r.mul(&r), sq);
    }

    #[test]
    fn valuation_is_additive(a in prop::collection::vec(0u64..11, 10), b in prop::collection::vec(0u64..11, 10)) {
        let f = field(11, 1);
        let (fa, fb) = (series(&f, &a), series(&f, &b));
        if let (Valuation::Exact(va), Valuation::Exact(vb)) = (fa.valuation(), fb.valuation()) {
            let prod = fa.mul(&fb);
            if va + vb < prod.precision() {
                prop_assert_eq!(prod.valuation(), Valuation::Exact(va + vb));
            }
        }
    }

    #[test]
    fn compose_is_associative(
        f in prop::collection::vec(0u64..5, 6),
        g in prop::collection::vec(0u64..5, 6),
        h in prop::collection::vec(0u64..5, 6),
    ) {
        let k = field(5, 1);
        let sf = series(&k, &f);
        let mut g = g;
        let mut h = h;
        g[0] = 0;
        h[0] = 0;
        let (sg, sh) = (series(&k, &g), series(&k, &h));
        let left = sf.compose(&sg).unwrap().compose(&sh).unwrap();
        let right = sf.compose(&sg.compose(&sh).unwrap()).unwrap();
        let n = left.precision().min(right.precision());
        prop_assert_eq!(left.truncate(n), right.truncate(n));
    }

    #[test]
    fn lucas_nonzero_iff_digits_dominate(t in 0u64..1_000_000, m in 0u64..1_000_000, which in 0usize..4) {
        let p = [5u64, 7, 11, 13][which];
        let m = m % (t + 1);
        let (bt, bm) = (BaseP::new(t, p), BaseP::new(m, p));
        let dominated = (0..bt.digits().len().max(1)).all(|i| bm.digit(i) <= bt.digit(i));
        prop_assert_eq!(lucas_binom(t, m, p).unwrap() != 0, dominated);
    }
}

#[test]
fn deuring_polynomial_is_separable() {
    for p in [5u32, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let h = deuring_polynomial(p).unwrap();
        assert_eq!(h.gcd(&h.derivative()).degree(), Some(0), "p = {p}");
    }
}

use proptest::prelude::*;

use lcseq::enumerate;
use lcseq::lfsr::{self, LfsrSpec};
use lcseq::oss::{self, OssParams};
use lcseq::poly::Polynomial;
use lcseq::rsbridge::{self, RsParams};
use lcseq::text;
use lcseq::{Fe, Field, MatrixFq, Sequence};

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::prime(2).unwrap()),
        Just(Field::prime(3).unwrap()),
        Just(Field::prime(5).unwrap()),
        Just(Field::prime(7).unwrap()),
        Just(Field::prime(65_521).unwrap()),
        Just(Field::new(2, 2, Some(&[1, 1, 1])).unwrap()),
        Just(Field::new(2, 3, Some(&[1, 1, 0, 1])).unwrap()),
        Just(Field::new(3, 2, Some(&[1, 0, 1])).unwrap()),
        Just(Field::new(2, 8, Some(&[1, 1, 0, 1, 1, 0, 0, 0, 1])).unwrap()),
    ]
}

fn elems(f: &Field, n: impl Into<prop::collection::SizeRange>) -> impl Strategy<Value = Vec<Fe>> {
    let f = f.clone();
    prop::collection::vec(0..f.q(), n)
        .prop_map(move |v| v.into_iter().map(|i| f.from_index(i).unwrap()).collect())
}

fn field_and_seq(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (Field, Sequence)> {
    field_strategy().prop_flat_map(move |f| {
        let g = f.clone();
        elems(&f, n.clone()).prop_map(move |e| (g.clone(), Sequence::new(&g, e).unwrap()))
    })
}

fn field_and_pair(
    n: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (Field, Sequence, Sequence)> {
    field_strategy().prop_flat_map(move |f| {
        let g = f.clone();
        n.clone().prop_flat_map(move |len| {
            let h = g.clone();
            (elems(&g, len), elems(&g, len)).prop_map(move |(a, b)| {
                (
                    h.clone(),
                    Sequence::new(&h, a).unwrap(),
                    Sequence::new(&h, b).unwrap(),
                )
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_axioms((f, v) in field_strategy().prop_flat_map(|f| { let g = f.clone(); elems(&f, 3).prop_map(move |v| (g.clone(), v)) })) {
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
            prop_assert_eq!(f.pow(a, f.q() - 1), Fe::ONE);
        } else {
            prop_assert!(f.inv(a).is_err());
        }
    }

    #[test]
    fn eval_matches_naive((f, c) in field_strategy().prop_flat_map(|f| { let g = f.clone(); elems(&f, 0..8).prop_map(move |v| (g.clone(), v)) }), x in 0u64..256) {
        let x = f.from_index(x % f.q()).unwrap();
        let naive = c.iter().enumerate().fold(Fe::ZERO, |acc, (i, &ci)| f.add(acc, f.mul(ci, f.pow(x, i as u64))));
        prop_assert_eq!(f.eval_poly(&c, x), naive);
        prop_assert_eq!(Polynomial::new(&f, c.clone()).unwrap().eval(x), naive);
    }

    #[test]
    fn rank_invariant_under_row_operations(
        (f, entries) in field_strategy().prop_flat_map(|f| { let g = f.clone(); elems(&f, 20).prop_map(move |v| (g.clone(), v)) }),
        i in 0usize..4, j in 0usize..4, s in 1u64..256,
    ) {
        let m = MatrixFq::new(&f, 4, 5, entries).unwrap();
        let rank = m.rank();
        prop_assert!(rank <= 4);
        let mut swapped = m.clone();
        swapped.swap_rows(i, j);
        prop_assert_eq!(swapped.rank(), rank);
        let mut scaled = m.clone();
        let s = f.from_index(s % (f.q() - 1) + 1).unwrap();
        scaled.scale_row(i, s);
        prop_assert_eq!(scaled.rank(), rank);
    }

    #[test]
    fn lc_bounds_and_extremes((_f, s) in field_and_seq(0..=24)) {
        let n = s.len();
        let l = lfsr::linear_complexity(&s);
        prop_assert!(l <= n);
        prop_assert_eq!(l == 0, s.is_zero());
        let extremal = n > 0 && s.elems()[..n - 1].iter().all(|e| e.is_zero()) && !s.elems()[n - 1].is_zero();
        prop_assert_eq!(l == n && n > 0, extremal);
        prop_assert_eq!(lfsr::linear_complexity(&s.neg()), l);
    }

    #[test]
    fn subadditive((_f, a, b) in field_and_pair(1..=20)) {
        let sum = a.add(&b).unwrap();
        prop_assert!(lfsr::linear_complexity(&sum) <= lfsr::linear_complexity(&a) + lfsr::linear_complexity(&b));
        prop_assert_eq!(lfsr::lc_distance(&a, &b).unwrap(), lfsr::lc_distance(&b, &a).unwrap());
        prop_assert_eq!(lfsr::lc_distance(&a, &b).unwrap() == 0, a == b);
    }

    #[test]
    fn bm_register_regenerates((_f, s) in field_and_seq(0..=24)) {
        let r = lfsr::berlekamp_massey(&s);
        let spec = r.register_for(&s).unwrap();
        prop_assert_eq!(spec.order(), r.linear_complexity());
        prop_assert_eq!(lfsr::lfsr_generate(&spec, s.len()), s);
        let fb = r.feedback();
        prop_assert!(fb.is_monic());
        prop_assert_eq!(fb.degree(), Some(r.linear_complexity()));
    }

    #[test]
    fn prefix_extension_is_monotone((f, s) in field_and_seq(1..=20), extra in 0u64..256) {
        // appending a term never lowers the complexity; when it rises it
        // jumps to n + 1 - L
        let l = lfsr::linear_complexity(&s);
        let next = f.from_index(extra % f.q()).unwrap();
        let longer = s.concat(&Sequence::new(&f, vec![next]).unwrap()).unwrap();
        let l2 = lfsr::linear_complexity(&longer);
        prop_assert!(l2 >= l);
        if l2 > l {
            prop_assert_eq!(l2, l.max(s.len() + 1 - l));
        }
    }

    #[test]
    fn shift_by_zero_prefix((f, s) in field_and_seq(1..=16), zeros in 0usize..6) {
        // a suffix never has larger complexity, and nothing shorter than
        // the first nonzero index can generate a nonzero sequence
        let shifted = Sequence::zeros(&f, zeros).concat(&s).unwrap();
        let l = lfsr::linear_complexity(&s);
        let ls = lfsr::linear_complexity(&shifted);
        match s.first_nonzero() {
            None => prop_assert_eq!(ls, 0),
            Some(u) => {
                prop_assert!(ls >= l);
                prop_assert!(ls > zeros + u);
            }
        }
    }

    #[test]
    fn generating_function(
        (_f, spec) in field_strategy().prop_flat_map(|f| {
            let g = f.clone();
            (1usize..5).prop_flat_map(move |l| {
                let h = g.clone();
                (elems(&g, l), elems(&g, l)).prop_map(move |(c, i)| (h.clone(), LfsrSpec::new(&h, c, i).unwrap()))
            })
        })
    ) {
        let n = 3 * spec.order();
        prop_assert!(lfsr::generating_function_check(&spec, n).unwrap());
        prop_assert!(lfsr::linear_complexity(&lfsr::lfsr_generate(&spec, n)) <= spec.order());
    }

    #[test]
    fn text_round_trip((f, s) in field_and_seq(0..=12)) {
        let line = text::format_sequence(&s);
        prop_assert_eq!(&text::parse_sequence(&line, &f).unwrap(), &s);
        let file = text::format_sequence_file(std::slice::from_ref(&s));
        let default = if f.is_prime_field() { Some(&f) } else { None };
        let back = text::parse_sequence_file(&file, default).unwrap();
        if s.is_empty() {
            prop_assert!(back.is_empty());
        } else {
            prop_assert_eq!(back, vec![s]);
        }
    }

    #[test]
    fn interpolation_inverts_evaluation(coeffs in prop::collection::vec(0u64..7, 1..=6)) {
        let f = Field::prime(7).unwrap();
        let p = Polynomial::new(&f, coeffs.iter().map(|&c| f.from_index(c).unwrap()).collect()).unwrap();
        let points: Vec<(Fe, Fe)> = f.nonzero_elements().take(coeffs.len()).map(|x| (x, p.eval(x))).collect();
        prop_assert_eq!(rsbridge::lagrange_interpolate(&f, &points).unwrap(), p);
    }

    #[test]
    fn rs_corrects_within_radius(msg in prop::collection::vec(0u64..7, 2), pos in prop::collection::btree_set(0usize..6, 0..=2), mags in prop::collection::vec(1u64..7, 2)) {
        let f = Field::prime(7).unwrap();
        let params = RsParams::new(&f, 2).unwrap();
        let msg: Vec<Fe> = msg.iter().map(|&m| f.from_index(m).unwrap()).collect();
        let cw = rsbridge::rs_encode(&params, &msg).unwrap();
        let mut err = vec![Fe::ZERO; 6];
        for (&p, &m) in pos.iter().zip(&mags) {
            err[p] = f.from_index(m).unwrap();
        }
        let err = Sequence::new(&f, err).unwrap();
        let (got_msg, got_err) = rsbridge::rs_decode_via_bm(&params, &cw.add(&err).unwrap()).unwrap();
        prop_assert_eq!(got_msg, msg);
        prop_assert_eq!(got_err, err);
    }

    #[test]
    fn oss_corrects_within_radius((f, e) in field_and_seq(8..=8), k in 1usize..=8, m in prop::collection::vec(0u64..256, 8)) {
        let params = OssParams::new(&f, 8, k).unwrap();
        let msg: Vec<Fe> = m[..k].iter().map(|&i| f.from_index(i % f.q()).unwrap()).collect();
        let x = oss::oss_encode(&params, &msg).unwrap();
        let y = x.add(&e).unwrap();
        let l = lfsr::linear_complexity(&e);
        match oss::oss_decode(&params, &y) {
            Ok(r) if 2 * l <= 8 - k => {
                prop_assert_eq!(r.corrected, x);
                prop_assert_eq!(r.message, msg);
            }
            Ok(r) => {
                // beyond the radius any answer must still be self-consistent
                prop_assert_eq!(r.corrected.add(&r.error).unwrap(), y);
                prop_assert!(2 * lfsr::linear_complexity(&r.error) <= 8 - k);
            }
            Err(lcseq::Error::DecodeFailure(_)) => prop_assert!(2 * l > 8 - k),
            Err(other) => prop_assert!(false, "{other}"),
        }
    }

    #[test]
    fn singleton_projection_is_injective_on_codes(k in 1usize..=5, n_extra in 0usize..3) {
        let f = Field::prime(3).unwrap();
        let n = k + n_extra;
        let params = OssParams::new(&f, n, k).unwrap();
        let book = oss::oss_codebook(&params, 1 << 12).unwrap();
        let d = params.min_distance();
        let mut images: Vec<Vec<Fe>> = book.iter().map(|x| oss::singleton_projection(x, d).unwrap()).collect();
        images.sort();
        images.dedup();
        prop_assert_eq!(images.len(), book.len());
    }

    #[test]
    fn counting_formulas_agree(q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16]), n in 0usize..120, r in 0usize..120) {
        let r = r % (n + 1);
        let c = enumerate::count_le_closed(q, n, r).unwrap();
        prop_assert_eq!(&enumerate::count_le_recur(q, n, r).unwrap(), &c);
        prop_assert_eq!(&enumerate::count_le_sum(q, n, r).unwrap(), &c);
        let below = if r == 0 { 0u32.into() } else { enumerate::count_le_closed(q, n, r - 1).unwrap() };
        prop_assert_eq!(enumerate::count_exact(q, n, r).unwrap(), c - below);
    }
}

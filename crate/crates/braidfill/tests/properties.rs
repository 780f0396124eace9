use braidfill::braid::{full_twist, left_normal_form, words_equal, BraidWord};
use braidfill::surgery::{axis_augmented_braid, ExtendedRational, SurgeredLink, AXIS};
use proptest::prelude::*;

fn word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(i, neg)| if neg { -i } else { i });
        prop::collection::vec(letter, 0..max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

/// A trivial word inserted at `at`: a free pair, a far commutator or a braid relation.
fn with_relator(w: &BraidWord, kind: u8, i: i32, j: i32, at: usize) -> BraidWord {
    let n = w.strands() as i32;
    let i = 1 + i.rem_euclid(n - 1);
    let rel: Vec<i32> = match kind % 3 {
        0 => vec![i, -i],
        1 if n >= 4 => {
            let j = 1 + j.rem_euclid(n - 1);
            if (i - j).abs() < 2 {
                vec![-i, i]
            } else {
                vec![i, j, -i, -j]
            }
        }
        2 if i + 1 < n => vec![i, i + 1, i, -(i + 1), -i, -(i + 1)],
        _ => vec![-i, i],
    };
    let mut l = w.letters().to_vec();
    let at = at % (l.len() + 1);
    l.splice(at..at, rel);
    BraidWord::new(w.strands(), l).unwrap()
}

fn ratio() -> impl Strategy<Value = ExtendedRational> {
    (-50i64..50, -50i64..50).prop_filter("not 0/0", |&(b, a)| b != 0 || a != 0).prop_map(|(b, a)| ExtendedRational::new(b, a).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn text_round_trip(w in word(12, 40)) {
        prop_assert_eq!(w.text().parse::<BraidWord>().unwrap(), w);
    }

    #[test]
    fn relators_keep_the_normal_form(w in word(10, 30), muts in prop::collection::vec((any::<u8>(), any::<i32>(), any::<i32>(), any::<usize>()), 1..20)) {
        let mut v = w.clone();
        for (k, i, j, at) in muts {
            v = with_relator(&v, k, i, j, at);
        }
        prop_assert_eq!(left_normal_form(&v), left_normal_form(&w));
        prop_assert_eq!(v.free_reduced().len() <= v.len(), true);
        prop_assert!(words_equal(&v.free_reduced(), &w).unwrap());
    }

    #[test]
    fn normal_form_word_is_equal(w in word(8, 30)) {
        let nf = left_normal_form(&w);
        prop_assert_eq!(left_normal_form(&nf.word()), nf);
    }

    #[test]
    fn full_twist_is_central(w in word(12, 30)) {
        let t = full_twist(w.strands()).unwrap();
        prop_assert!(words_equal(&t.compose(&w).unwrap(), &w.compose(&t).unwrap()).unwrap());
    }

    #[test]
    fn erasure_composes(u in word(9, 20), s in 1usize..=9) {
        let v = u.flipped().inverse();
        let s = 1 + (s - 1) % u.strands();
        let uv = u.compose(&v).unwrap();
        let split = u.erase_strand(s).unwrap().compose(&v.erase_strand(u.track(s)).unwrap()).unwrap();
        prop_assert_eq!(uv.erase_strand(s).unwrap(), split);
    }

    #[test]
    fn erasing_two_strands_in_either_order(w in word(9, 30), a in 1usize..=9, b in 1usize..=9) {
        let n = w.strands();
        let (a, b) = (1 + (a - 1) % n, 1 + (b - 1) % n);
        prop_assume!(a != b && n >= 3);
        let first = w.erase_strand(a).unwrap();
        let b_after = if b > a { b - 1 } else { b };
        prop_assert_eq!(first.erase_strand(b_after).unwrap(), w.erase_strands(&[a, b]).unwrap());
    }

    #[test]
    fn twist_then_untwist(r in ratio(), t in -20i64..20) {
        prop_assert_eq!(r.twist_update(t).twist_update(-t), r);
    }

    #[test]
    fn offsets_add(r in ratio(), s in -20i64..20, t in -20i64..20, lk in -5i64..5) {
        prop_assert_eq!(r.offset_update(s, lk).offset_update(t, lk), r.offset_update(s + t, lk));
    }

    #[test]
    fn rational_text_round_trip(r in ratio()) {
        prop_assert_eq!(r.to_string().parse::<ExtendedRational>().unwrap(), r);
    }

    #[test]
    fn linking_survives_conjugation(w in word(8, 30), c in word(8, 12)) {
        prop_assume!(w.strands() == c.strands());
        let link = SurgeredLink::from_cycles(w, false);
        let conj = link.conjugate(&c).unwrap();
        let names: Vec<String> = link.components.iter().map(|c| c.name.clone()).collect();
        for a in &names {
            for b in &names {
                if a < b {
                    prop_assert_eq!(link.linking_number(a, b).unwrap(), conj.linking_number(a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn axis_links_each_component_by_its_strand_count(w in word(8, 30)) {
        let link = SurgeredLink::from_cycles(w.clone(), true);
        let big = axis_augmented_braid(&w);
        let n = w.strands();
        let mut comps: Vec<(String, Vec<usize>)> = link.components.iter().map(|c| (c.name.clone(), c.strands.clone())).collect();
        comps.push(("round".to_string(), vec![n + 1]));
        let explicit = SurgeredLink::new(big, false, comps).unwrap();
        for c in &link.components {
            let expected = c.strands.len() as i64;
            prop_assert_eq!(link.linking_number(AXIS, &c.name).unwrap(), expected);
            prop_assert_eq!(explicit.linking_number("round", &c.name).unwrap(), expected);
        }
    }
}

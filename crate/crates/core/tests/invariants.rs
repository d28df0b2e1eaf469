use proptest::prelude::*;
use spd_core::diagrams::{
    canonical_diagram, inverse_ladder_move, ladder_closure, ladder_move, mitosis_full, mitosis_transposed, CellList,
};
use spd_core::genpoly::{extended_ladder_closure, f_w, f_w_extended};
use spd_core::pathmodel::{parse_ascii, render_ascii, trace_pipes, w_of_diagram};
use spd_core::weyl::apply_word;
use spd_core::{shape, SignedPermutation, SkewPipeDream, Word};

fn element(n: usize) -> impl Strategy<Value = SignedPermutation> {
    let perm = Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle();
    (perm, proptest::collection::vec(any::<bool>(), n)).prop_map(|(perm, signs)| {
        let window = perm.iter().zip(&signs).map(|(&v, &neg)| if neg { -v } else { v }).collect();
        SignedPermutation::new(window).unwrap()
    })
}

fn diagram(n: usize) -> impl Strategy<Value = SkewPipeDream> {
    (0..=shape(n).full_mask()).prop_map(move |m| SkewPipeDream::from_mask(n, m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn moves_keep_size_and_element(d in diagram(4)) {
        let w = w_of_diagram(&d).unwrap();
        for &c in shape(4).cells() {
            if let Some(e) = ladder_move(&d, c).unwrap() {
                prop_assert_eq!(e.len(), d.len());
                prop_assert_eq!(w_of_diagram(&e).unwrap(), w.clone());
            }
            if let Some(e) = inverse_ladder_move(&d, c).unwrap() {
                prop_assert_eq!(e.len(), d.len());
            }
        }
    }

    #[test]
    fn transposed_mitosis_refines_full(d in diagram(4), i in 1usize..=4) {
        let t = mitosis_transposed(&d, i).unwrap();
        let f = mitosis_full(&d, i).unwrap();
        prop_assert!(t.is_subset(&f));
        for e in &f {
            prop_assert_eq!(e.len() + 1, d.len());
        }
    }

    #[test]
    fn json_round_trip(d in diagram(4)) {
        let json = serde_json::to_string(&d.to_cell_list()).unwrap();
        let back: CellList = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(SkewPipeDream::try_from(&back).unwrap(), d);
    }

    #[test]
    fn ascii_round_trip(d in diagram(3)) {
        let p = trace_pipes(&d).unwrap();
        prop_assert_eq!(parse_ascii(3, &render_ascii(&p)).unwrap(), p.tiles());
    }

    #[test]
    fn canonical_diagram_size(w in element(4)) {
        let d = canonical_diagram(&w);
        prop_assert_eq!(d.len() + w.length(), 16);
        prop_assert_eq!(w_of_diagram(&d).unwrap(), w);
    }

    #[test]
    fn closure_members_are_reduced(w in element(4)) {
        for d in ladder_closure(&canonical_diagram(&w)) {
            let p = trace_pipes(&d).unwrap();
            prop_assert_eq!(p.w(), w.clone());
            prop_assert!(p.is_reduced());
        }
    }

    #[test]
    fn generating_function_counts(w in element(3), j in 1usize..=3) {
        let closure = ladder_closure(&canonical_diagram(&w));
        prop_assert_eq!(f_w(&w, j).unwrap().eval_one(), closure.len() as i64);
        let ext = extended_ladder_closure(&canonical_diagram(&w), j).unwrap();
        prop_assert_eq!(f_w_extended(&w, j).unwrap().eval_one(), ext.len() as i64);
    }
}

#[test]
fn word_and_window_agree() {
    let w = apply_word(&Word(vec![2, 1, 3, 2, 1]), 3).unwrap();
    assert_eq!(w.to_string(), "-3,-2,1");
    assert_eq!(ladder_closure(&canonical_diagram(&w)).len(), 6);
}

mod common;

use proptest::prelude::*;

use common::{library, members_of, Oracle};
use grouprod::formations::Formation;
use grouprod::io::{parse_document, GroupDocument, Word};
use grouprod::{Elem, Group, Permutation};

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u16).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|img| Permutation::from_images(img).unwrap())
}

/// Small permutation groups: up to three random generators on 2..=5 points.
fn perm_group() -> impl Strategy<Value = Group> {
    (2usize..=5)
        .prop_flat_map(|d| (Just(d), prop::collection::vec(permutation(d), 0..=3)))
        .prop_map(|(d, gens)| Group::from_permutations(d, gens).unwrap())
}

fn library_group() -> impl Strategy<Value = &'static Group> {
    (0..library().len()).prop_map(|i| &library()[i].group)
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(("[a-z][a-z0-9_]{0,3}", -5i64..=5), 0..5).prop_map(|factors| {
        Word(factors.into_iter().filter(|(_, e)| *e != 0).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_subgroups_obey_lagrange(g in library_group(), picks in prop::collection::vec(any::<prop::sample::Index>(), 0..4)) {
        let elems: Vec<Elem> = picks.iter().map(|i| Elem::new(i.index(g.order()))).collect();
        let h = g.generate(&elems).unwrap();
        prop_assert_eq!(g.order() % h.order(), 0);
        for &x in &elems {
            prop_assert!(h.contains(x));
        }
        for x in h.elements() {
            prop_assert!(h.contains(g.inv(x)));
            for y in h.elements() {
                prop_assert!(h.contains(g.mul(x, y)));
            }
        }
    }

    #[test]
    fn formation_containments(g in perm_group()) {
        let chain = [
            g.is_nilpotent().unwrap(),
            g.is_supersoluble().unwrap(),
            g.is_w_supersoluble().unwrap(),
            g.sylow_tower_supersoluble_type().unwrap(),
        ];
        prop_assert!(chain.windows(2).all(|w| !w[0] || w[1]), "{:?}", chain);
    }

    #[test]
    fn residual_quotient_lies_in_formation(g in perm_group()) {
        for f in Formation::ALL {
            let r = g.residual(f).unwrap();
            prop_assert!(g.is_normal(&r).unwrap());
            let q = g.quotient(&r).unwrap();
            prop_assert!(q.group.is_member(f).unwrap());
            prop_assert_eq!(r.is_trivial(), g.is_member(f).unwrap());
        }
    }

    #[test]
    fn supersolubility_matches_chief_series_oracle(g in perm_group()) {
        let o = Oracle::new(&g);
        prop_assert_eq!(g.is_supersoluble().unwrap(), o.quotient_supersoluble(&o.t.trivial()));
        for f in Formation::ALL {
            prop_assert_eq!(members_of(&g, &g.residual(f).unwrap()), o.residual(f.short_name()));
        }
    }

    #[test]
    fn quotients_have_index_order(g in library_group(), pick in any::<prop::sample::Index>()) {
        let normals = g.normal_subgroups().unwrap();
        let n = &normals.nodes()[pick.index(normals.len())];
        let q = g.quotient(n).unwrap();
        prop_assert_eq!(q.group.order() * n.order(), g.order());
        prop_assert!(q.image(n).unwrap().is_trivial());
    }

    #[test]
    fn words_round_trip(w in word()) {
        prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn documents_round_trip(g in perm_group(), picks in prop::collection::vec(any::<prop::sample::Index>(), 0..3)) {
        let elems: Vec<Elem> = picks.iter().map(|i| Elem::new(i.index(g.order()))).collect();
        let h = g.generate(&elems).unwrap();
        let doc = GroupDocument::from_group(&g, &[("H".to_string(), h.clone())], None).unwrap();
        let text = doc.serialize();
        let back = parse_document(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.serialize(), text);
        let loaded = back.build().unwrap();
        prop_assert_eq!(loaded.group.fingerprint(), g.fingerprint());
        prop_assert_eq!(loaded.subgroup("H").unwrap().order(), h.order());
    }

    #[test]
    fn chains_are_conjugation_invariant(g in perm_group(), pick in any::<prop::sample::Index>(), y in any::<prop::sample::Index>()) {
        let subgroups = g.all_subgroups().unwrap();
        let h = &subgroups[pick.index(subgroups.len())];
        let y = Elem::new(y.index(g.order()));
        let gens: Vec<Elem> = h.generators().iter().map(|&x| g.conjugate(x, y)).collect();
        let hy = g.generate(&gens).unwrap();
        prop_assert_eq!(g.p_subnormal_chain(h).unwrap().is_some(), g.p_subnormal_chain(&hy).unwrap().is_some());
    }
}

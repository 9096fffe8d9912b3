mod common;

use common::{count, members_of, Oracle};
use grouprod::corpus::Recipe;
use grouprod::formations::Formation;
use grouprod::Group;

fn build(r: Recipe) -> Group {
    r.build().unwrap()
}

fn named() -> Vec<(Recipe, usize, usize)> {
    // (recipe, subgroups, normal subgroups)
    vec![
        (Recipe::Symmetric { degree: 3 }, 6, 3),
        (Recipe::Symmetric { degree: 4 }, 30, 4),
        (Recipe::Alternating { degree: 4 }, 10, 3),
        (Recipe::Alternating { degree: 5 }, 59, 2),
        (Recipe::Dihedral { n: 4 }, 10, 6),
        (Recipe::Dicyclic { n: 2 }, 6, 6),
        (Recipe::ElementaryAbelian { p: 2, rank: 3 }, 16, 16),
        (Recipe::cyclic(12), 6, 6),
    ]
}

#[test]
fn oracle_subgroup_counts_match_known_values() {
    for (r, subgroups, normals) in named() {
        let o = Oracle::new(&build(r.clone()));
        assert_eq!(o.subgroups.len(), subgroups, "{r}");
        assert_eq!(o.normals.len(), normals, "{r}");
    }
}

#[test]
fn oracle_residuals_match_known_values() {
    let s4 = Oracle::new(&build(Recipe::Symmetric { degree: 4 }));
    assert_eq!(count(&s4.residual("n")), 12);
    assert_eq!(count(&s4.residual("u")), 4);
    assert_eq!(count(&s4.residual("wu")), 4);
    let a4 = Oracle::new(&build(Recipe::Alternating { degree: 4 }));
    assert_eq!(count(&a4.residual("n")), 4);
    assert!(!a4.quotient_w_supersoluble(&a4.t.trivial()));
    let d8 = Oracle::new(&build(Recipe::Dihedral { n: 4 }));
    assert_eq!(count(&d8.residual("n")), 1);
    let a5 = Oracle::new(&build(Recipe::Alternating { degree: 5 }));
    assert_eq!(count(&a5.residual("wu")), 60);
}

#[test]
fn library_agrees_with_oracles_on_named_groups() {
    for (r, _, _) in named() {
        let g = build(r.clone());
        let o = Oracle::new(&g);
        let lib_subgroups: Vec<_> = g.all_subgroups().unwrap().iter().map(|h| members_of(&g, h)).collect();
        assert_eq!(lib_subgroups.len(), o.subgroups.len(), "{r}");
        for s in &lib_subgroups {
            assert!(o.subgroups.contains(s), "{r}");
        }
        assert_eq!(g.normal_subgroups().unwrap().len(), o.normals.len(), "{r}");
        assert_eq!(g.is_supersoluble().unwrap(), o.quotient_supersoluble(&o.t.trivial()), "{r}");
        for f in Formation::ALL {
            let lib = members_of(&g, &g.residual(f).unwrap());
            assert_eq!(lib, o.residual(f.short_name()), "{r} {f}");
        }
        for h in g.all_subgroups().unwrap().iter() {
            let chain = g.p_subnormal_chain(h).unwrap();
            assert_eq!(chain.is_some(), o.p_subnormal(&members_of(&g, h)), "{r}");
        }
    }
}

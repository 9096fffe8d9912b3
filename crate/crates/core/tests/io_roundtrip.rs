mod common;

use common::library;
use grouprod::corpus::{build_example_972, harvest_factorizations};
use grouprod::io::{parse_document, parse_group, GroupDocument};
use grouprod::GroupError;

#[test]
fn every_library_group_round_trips() {
    for entry in library() {
        let provenance = serde_json::to_string(&entry.recipe).unwrap();
        let doc = GroupDocument::from_group(&entry.group, &[], Some(provenance)).unwrap();
        let text = doc.serialize();
        let back = parse_document(&text).unwrap();
        assert_eq!(back, doc, "{}", entry.recipe);
        let loaded = back.build().unwrap();
        assert_eq!(loaded.group.table_rows(), entry.group.table_rows(), "{}", entry.recipe);
    }
}

#[test]
fn harvested_instances_survive_serialization() {
    for entry in library().iter().filter(|e| e.group.order() <= 24) {
        let instances = harvest_factorizations(entry).unwrap();
        let mut named = Vec::new();
        for (k, inst) in instances.iter().enumerate() {
            named.push((format!("A.{k:03}"), inst.a.clone()));
            named.push((format!("B.{k:03}"), inst.b.clone()));
        }
        let doc = GroupDocument::from_group(&entry.group, &named, None).unwrap();
        let loaded = parse_group(&doc.serialize()).unwrap();
        for (k, inst) in instances.iter().enumerate() {
            let a = loaded.subgroup(&format!("A.{k:03}")).unwrap();
            let b = loaded.subgroup(&format!("B.{k:03}")).unwrap();
            assert_eq!(a.members(), inst.a.members(), "{} {k} {:?} {:?}", entry.recipe, entry.group.generator_names(), inst.a.generators());
            assert_eq!(b.members(), inst.b.members());
        }
    }
}

#[test]
fn replay_reproduces_tables() {
    for entry in library().iter().step_by(7) {
        let again = entry.recipe.build().unwrap();
        assert_eq!(again.fingerprint(), entry.group.fingerprint(), "{}", entry.recipe);
    }
}

#[test]
fn shipped_example_matches_construction() {
    let loaded = parse_group(include_str!("../data/example972.group")).unwrap();
    let ex = build_example_972().unwrap();
    assert_eq!(loaded.group.fingerprint(), ex.group.fingerprint());
    assert_eq!(loaded.subgroup("A").unwrap().members(), ex.a.members());
    assert_eq!(loaded.subgroup("B").unwrap().members(), ex.b.members());
    assert_eq!(loaded.subgroup("A0").unwrap().members(), ex.a0.members());
    assert_eq!(loaded.subgroup("Q").unwrap().members(), ex.q.members());
}

#[test]
fn validation_errors_are_distinguished_from_parse_errors() {
    let not_closed = "format_version 1\nkind table\norder 2\ngenerator a 1\nrow 0 1\nrow 1 1\n";
    assert!(matches!(parse_group(not_closed), Err(GroupError::Validation(_) | GroupError::ConstructionInvalid(_))));
    let bad_action = "\
format_version 1
kind semidirect
begin normal
  kind permutation
  degree 3
  generator a (1 2 3)
end normal
begin acting
  kind permutation
  degree 2
  generator t (1 2)
end acting
action t 1
";
    assert!(parse_group(bad_action).is_err());
    let wrong_version = "format_version 2\nkind permutation\ndegree 1\n";
    assert!(matches!(parse_document(wrong_version), Err(GroupError::Parse { line: 1, .. })));
    let missing_version = "kind permutation\ndegree 1\n";
    assert!(matches!(parse_document(missing_version), Err(GroupError::Parse { .. })));
}

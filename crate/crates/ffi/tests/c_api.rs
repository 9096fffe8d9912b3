use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use grouprod_ffi::*;

const S3: &str = "format_version 1\nkind permutation\ndegree 3\ngenerator a (1 2)\ngenerator b (1 2 3)\nsubgroup A b\nsubgroup B a\n";

fn parse(text: &str) -> (GrpStatus, *mut GrpGroup) {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    let status = unsafe { grp_group_parse(c.as_ptr(), &mut g) };
    (status, g)
}

fn subgroup(g: *const GrpGroup, name: &str) -> *mut GrpSubgroup {
    let c = CString::new(name).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { grp_group_subgroup(g, c.as_ptr(), &mut h) }, GrpStatus::Ok);
    h
}

fn last_error() -> String {
    let p = grp_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn s3_round() {
    let (status, g) = parse(S3);
    assert_eq!(status, GrpStatus::Ok);
    assert!(grp_last_error_message().is_null());
    let mut order = 0;
    assert_eq!(unsafe { grp_group_order(g, &mut order) }, GrpStatus::Ok);
    assert_eq!(order, 6);
    let mut ss = false;
    assert_eq!(unsafe { grp_group_is_supersoluble(g, &mut ss) }, GrpStatus::Ok);
    assert!(ss);
    let mut nil = true;
    assert_eq!(unsafe { grp_group_is_member(g, GrpFormation::Nilpotent, &mut nil) }, GrpStatus::Ok);
    assert!(!nil);

    let mut r = ptr::null_mut();
    assert_eq!(unsafe { grp_group_residual(g, GrpFormation::Nilpotent, &mut r) }, GrpStatus::Ok);
    let mut r_order = 0;
    assert_eq!(unsafe { grp_subgroup_order(r, &mut r_order) }, GrpStatus::Ok);
    assert_eq!(r_order, 3);

    let (a, b) = (subgroup(g, "A"), subgroup(g, "B"));
    unsafe { grp_group_free(g) };
    // Subgroup handles keep their parent alive.
    let mut flags = GrpProductFlags::default();
    assert_eq!(unsafe { grp_classify(a, b, &mut flags) }, GrpStatus::Ok);
    assert!(flags.is_product && flags.a_normal && flags.weak_direct);
    assert_eq!(flags.mutually_permutable, 1);
    unsafe {
        grp_subgroup_free(a);
        grp_subgroup_free(b);
        grp_subgroup_free(r);
    }
}

#[test]
fn errors_carry_status_and_message() {
    let (status, g) = parse("format_version 1\nkind permutation\ndegree 3\ngenerator a (1 4)\n");
    assert_eq!(status, GrpStatus::ParseError);
    assert!(g.is_null());
    assert!(last_error().contains("line 4"));

    let (status, g) = parse(S3);
    assert_eq!(status, GrpStatus::Ok);
    let name = CString::new("C").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { grp_group_subgroup(g, name.as_ptr(), &mut h) }, GrpStatus::NotFound);
    assert!(last_error().contains("\"C\""));
    assert_eq!(unsafe { grp_group_order(g, ptr::null_mut()) }, GrpStatus::NullArgument);
    assert_eq!(unsafe { grp_group_order(ptr::null(), ptr::null_mut()) }, GrpStatus::NullArgument);

    let (_, other) = parse(S3);
    let (a, b) = (subgroup(g, "A"), subgroup(other, "B"));
    let mut flags = GrpProductFlags::default();
    assert_eq!(unsafe { grp_classify(a, b, &mut flags) }, GrpStatus::ForeignSubgroup);
    unsafe {
        grp_subgroup_free(a);
        grp_subgroup_free(b);
        grp_group_free(g);
        grp_group_free(other);
        grp_group_free(ptr::null_mut());
    }
}

#[test]
fn example972_through_the_abi() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { grp_group_example972(&mut g) }, GrpStatus::Ok);
    let mut order = 0;
    assert_eq!(unsafe { grp_group_order(g, &mut order) }, GrpStatus::Ok);
    assert_eq!(order, 972);
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { grp_group_residual(g, GrpFormation::Supersoluble, &mut r) }, GrpStatus::Ok);
    let mut r_order = 0;
    assert_eq!(unsafe { grp_subgroup_order(r, &mut r_order) }, GrpStatus::Ok);
    assert_eq!(r_order, 81);
    let (a, b) = (subgroup(g, "A"), subgroup(g, "B"));
    let mut flags = GrpProductFlags::default();
    assert_eq!(unsafe { grp_classify(a, b, &mut flags) }, GrpStatus::Ok);
    assert!(flags.weak_normal && !flags.weak_direct && !flags.sylow_wise_permutes);
    unsafe {
        grp_subgroup_free(a);
        grp_subgroup_free(b);
        grp_subgroup_free(r);
        grp_group_free(g);
    }
}

#[test]
fn version_is_package_version() {
    let v = unsafe { CStr::from_ptr(grp_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_api_and_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/grouprod.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in [
        "grp_group_parse",
        "grp_group_example972",
        "grp_group_free",
        "grp_group_order",
        "grp_group_is_supersoluble",
        "grp_group_is_member",
        "grp_group_subgroup",
        "grp_group_residual",
        "grp_subgroup_order",
        "grp_subgroup_free",
        "grp_classify",
        "grp_last_error_message",
    ] {
        assert!(text.contains(&format!("{f}(")), "{f} missing from header");
    }
    // A C compiler is optional; check syntax when one is present.
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-x", "c", "-std=c99", "-Wall", "-Werror"])
        .arg(&header)
        .status()
    else {
        return;
    };
    assert!(status.success());
}

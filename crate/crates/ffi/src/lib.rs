//! C interface to `grouprod`.
//!
//! Every fallible function returns a [`GrpStatus`] and writes its result
//! through an out pointer. On failure the message is available from
//! [`grp_last_error_message`] until the next call on the same thread.
//! Handles are opaque and must be released with the matching `*_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use grouprod::corpus::build_example_972;
use grouprod::formations::Formation;
use grouprod::io::LoadedGroup;
use grouprod::{GroupError, Subgroup};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrpStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    ValidationError = 4,
    CapExceeded = 5,
    NotFound = 6,
    ForeignSubgroup = 7,
    Internal = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrpFormation {
    Nilpotent = 0,
    Supersoluble = 1,
    WSupersoluble = 2,
}

impl From<GrpFormation> for Formation {
    fn from(f: GrpFormation) -> Self {
        match f {
            GrpFormation::Nilpotent => Formation::Nilpotent,
            GrpFormation::Supersoluble => Formation::Supersoluble,
            GrpFormation::WSupersoluble => Formation::WSupersoluble,
        }
    }
}

/// Classification of `G = AB`. `mutually_permutable` is 1, 0, or -1 when
/// a factor was too large to decide.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GrpProductFlags {
    pub is_product: bool,
    pub a_normal: bool,
    pub trivial_intersection: bool,
    pub b_permutes_sylow_maximals: bool,
    pub sylow_wise_permutes: bool,
    pub weak_normal: bool,
    pub weak_direct: bool,
    pub mutually_permutable: i8,
    pub theorem_d_hypothesis: bool,
    pub g_prime_nilpotent: bool,
}

/// A group together with its named subgroups.
pub struct GrpGroup {
    inner: LoadedGroup,
}

/// A subgroup of one particular group. Holds its own reference to the
/// parent, so it may outlive the group handle it came from.
pub struct GrpSubgroup {
    group: grouprod::Group,
    inner: Subgroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &GroupError) -> GrpStatus {
    match e {
        GroupError::Parse { .. } => GrpStatus::ParseError,
        GroupError::CapExceeded { .. } => GrpStatus::CapExceeded,
        GroupError::Validation(_) | GroupError::ConstructionInvalid(_) | GroupError::NotNormal => {
            GrpStatus::ValidationError
        }
        GroupError::ForeignSubgroup | GroupError::ForeignElement => GrpStatus::ForeignSubgroup,
        _ => GrpStatus::Internal,
    }
}

/// Runs `body`, recording any error or panic.
fn guard(body: impl FnOnce() -> Result<(), (GrpStatus, String)>) -> GrpStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => GrpStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("panic inside grouprod".into());
            GrpStatus::Panic
        }
    }
}

fn lift(e: GroupError) -> (GrpStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (GrpStatus, String) {
    (GrpStatus::NullArgument, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (GrpStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    // SAFETY: caller promises a nul-terminated string.
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| (GrpStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (GrpStatus, String)> {
    // SAFETY: caller promises a live handle or null.
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

fn write_out<T>(out: *mut T, value: T) -> Result<(), (GrpStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    // SAFETY: checked non-null; caller promises it is writable.
    unsafe { out.write(value) };
    Ok(())
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn grp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn grp_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version has interior nul"),
    };
    VERSION.as_ptr()
}

/// Parses a group definition document.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn grp_group_parse(text: *const c_char, out: *mut *mut GrpGroup) -> GrpStatus {
    guard(|| {
        let text = unsafe { read_str(text, "text") }?;
        let inner = grouprod::io::parse_group(text).map_err(lift)?;
        write_out(out, Box::into_raw(Box::new(GrpGroup { inner })))
    })
}

/// Builds the order-972 example with named subgroups `A`, `B`, `A0` and `Q`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn grp_group_example972(out: *mut *mut GrpGroup) -> GrpStatus {
    guard(|| {
        let ex = build_example_972().map_err(lift)?;
        let subgroups = [("A", &ex.a), ("B", &ex.b), ("A0", &ex.a0), ("Q", &ex.q)]
            .into_iter()
            .map(|(n, h)| (n.to_string(), h.clone()))
            .collect();
        let inner = LoadedGroup {
            group: ex.group.clone(),
            subgroups,
        };
        write_out(out, Box::into_raw(Box::new(GrpGroup { inner })))
    })
}

/// # Safety
/// `group` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn grp_group_free(group: *mut GrpGroup) {
    if !group.is_null() {
        // SAFETY: handle came from Box::into_raw.
        drop(unsafe { Box::from_raw(group) });
    }
}

/// # Safety
/// `group` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn grp_group_order(group: *const GrpGroup, out: *mut usize) -> GrpStatus {
    guard(|| {
        let g = unsafe { deref(group, "group") }?;
        write_out(out, g.inner.group.order())
    })
}

/// # Safety
/// `group` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn grp_group_is_supersoluble(group: *const GrpGroup, out: *mut bool) -> GrpStatus {
    unsafe { grp_group_is_member(group, GrpFormation::Supersoluble, out) }
}

/// # Safety
/// `group` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn grp_group_is_member(
    group: *const GrpGroup,
    formation: GrpFormation,
    out: *mut bool,
) -> GrpStatus {
    guard(|| {
        let g = unsafe { deref(group, "group") }?;
        let member = g.inner.group.is_member(formation.into()).map_err(lift)?;
        write_out(out, member)
    })
}

/// Looks up a named subgroup from the document.
///
/// # Safety
/// `group` must be a live handle, `name` nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn grp_group_subgroup(
    group: *const GrpGroup,
    name: *const c_char,
    out: *mut *mut GrpSubgroup,
) -> GrpStatus {
    guard(|| {
        let g = unsafe { deref(group, "group") }?;
        let name = unsafe { read_str(name, "name") }?;
        let h = g
            .inner
            .subgroups
            .get(name)
            .ok_or_else(|| (GrpStatus::NotFound, format!("no subgroup named {name:?}")))?;
        let handle = GrpSubgroup {
            group: g.inner.group.clone(),
            inner: h.clone(),
        };
        write_out(out, Box::into_raw(Box::new(handle)))
    })
}

/// Residual of the whole group for `formation`.
///
/// # Safety
/// `group` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn grp_group_residual(
    group: *const GrpGroup,
    formation: GrpFormation,
    out: *mut *mut GrpSubgroup,
) -> GrpStatus {
    guard(|| {
        let g = unsafe { deref(group, "group") }?;
        let r = g.inner.group.residual(formation.into()).map_err(lift)?;
        let handle = GrpSubgroup {
            group: g.inner.group.clone(),
            inner: r,
        };
        write_out(out, Box::into_raw(Box::new(handle)))
    })
}

/// # Safety
/// `subgroup` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn grp_subgroup_order(subgroup: *const GrpSubgroup, out: *mut usize) -> GrpStatus {
    guard(|| {
        let h = unsafe { deref(subgroup, "subgroup") }?;
        write_out(out, h.inner.order())
    })
}

/// # Safety
/// `subgroup` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn grp_subgroup_free(subgroup: *mut GrpSubgroup) {
    if !subgroup.is_null() {
        // SAFETY: handle came from Box::into_raw.
        drop(unsafe { Box::from_raw(subgroup) });
    }
}

/// Classifies `G = AB` for two subgroups of the same group.
///
/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn grp_classify(
    a: *const GrpSubgroup,
    b: *const GrpSubgroup,
    out: *mut GrpProductFlags,
) -> GrpStatus {
    guard(|| {
        let a = unsafe { deref(a, "a") }?;
        let b = unsafe { deref(b, "b") }?;
        let d = a.group.classify(&a.inner, &b.inner).map_err(lift)?;
        let f = d.flags;
        write_out(
            out,
            GrpProductFlags {
                is_product: f.is_product,
                a_normal: f.a_normal,
                trivial_intersection: f.trivial_intersection,
                b_permutes_sylow_maximals: f.b_permutes_sylow_maximals,
                sylow_wise_permutes: f.sylow_wise_permutes,
                weak_normal: f.weak_normal,
                weak_direct: f.weak_direct,
                mutually_permutable: f.mutually_permutable.map_or(-1, i8::from),
                theorem_d_hypothesis: f.theorem_d_hypothesis,
                g_prime_nilpotent: f.g_prime_nilpotent,
            },
        )
    })
}

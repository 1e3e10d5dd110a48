//! C ABI for kunzkit.
//!
//! Semigroups and nilsemigroups are opaque heap handles created by
//! `kk_*_new`/`kk_*_from_*` and released with the matching `kk_*_free`.
//! Every fallible call returns a [`KkStatus`]; on failure the message is
//! available from [`kk_last_error`] on the same thread until the next call.
//! Strings returned through out-parameters are owned by the caller and must
//! be released with [`kk_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use kunzkit::families::{self, FamilyError, FamilyMember, FamilyName};
use kunzkit::{KunzError, KunzNilsemigroup, NumericalSemigroup, SemigroupError};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KkStatus {
    Ok = 0,
    InvalidArgument = 1,
    NotCofinite = 2,
    Hypothesis = 3,
    Internal = 4,
    NullPointer = 5,
    BufferTooSmall = 6,
}

/// Opaque numerical semigroup.
pub struct KkSemigroup {
    inner: NumericalSemigroup,
}

/// Opaque Kunz nilsemigroup.
pub struct KkNilsemigroup {
    inner: KunzNilsemigroup,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KkInvariants {
    pub multiplicity: u64,
    pub embedding_dimension: u64,
    pub codimension: u64,
    /// -1 for the nonnegative integers.
    pub frobenius: i64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KkNilSummary {
    pub multiplicity: u64,
    pub embedding_dimension: u64,
    pub outer_betti: u64,
    pub nil_trades: u64,
    pub eta: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl ToString) {
    let text = msg.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).unwrap_or_default());
}

fn fail(status: KkStatus, msg: impl ToString) -> KkStatus {
    set_error(msg);
    status
}

fn semigroup_status(e: &SemigroupError) -> KkStatus {
    match e {
        SemigroupError::NotCofinite(_) => KkStatus::NotCofinite,
        SemigroupError::Postcondition(_) | SemigroupError::Overflow => KkStatus::Internal,
        _ => KkStatus::InvalidArgument,
    }
}

fn family_status(e: &FamilyError) -> KkStatus {
    match e {
        FamilyError::Hypothesis(_) => KkStatus::Hypothesis,
        FamilyError::Semigroup(s) => semigroup_status(s),
        _ => KkStatus::Internal,
    }
}

fn kunz_status(e: &KunzError) -> KkStatus {
    match e {
        KunzError::MultiplicityTooSmall(_) => KkStatus::InvalidArgument,
        KunzError::Semigroup(s) => semigroup_status(s),
        _ => KkStatus::Internal,
    }
}

/// Runs `f`, turning a panic into [`KkStatus::Internal`].
fn guard(f: impl FnOnce() -> KkStatus) -> KkStatus {
    set_error("");
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(KkStatus::Internal, "panic inside kunzkit"),
    }
}

/// Copies `values` into `buf`, always reporting the full length.
unsafe fn copy_out(values: &[u64], buf: *mut u64, cap: usize, len: *mut usize) -> KkStatus {
    if len.is_null() {
        return fail(KkStatus::NullPointer, "len is null");
    }
    *len = values.len();
    if cap < values.len() {
        return fail(KkStatus::BufferTooSmall, format!("need room for {} values", values.len()));
    }
    if !values.is_empty() {
        if buf.is_null() {
            return fail(KkStatus::NullPointer, "buf is null");
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    KkStatus::Ok
}

unsafe fn emit_string(text: String, out: *mut *mut c_char) -> KkStatus {
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            KkStatus::Ok
        }
        Err(e) => fail(KkStatus::Internal, e),
    }
}

fn box_member(member: FamilyMember, out: *mut *mut KkSemigroup) -> KkStatus {
    let handle = Box::new(KkSemigroup { inner: member.semigroup });
    // SAFETY: callers check `out` before building the member.
    unsafe { *out = Box::into_raw(handle) };
    KkStatus::Ok
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn kk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread; empty after success.
/// The pointer stays valid until the next kunzkit call on this thread.
#[no_mangle]
pub extern "C" fn kk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string produced by this library. Null is ignored.
///
/// # Safety
/// `s` must come from a kunzkit out-parameter and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn kk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the semigroup generated by `generators[0..len]`.
///
/// # Safety
/// `generators` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kk_semigroup_new(generators: *const u64, len: usize, out: *mut *mut KkSemigroup) -> KkStatus {
    guard(|| {
        if out.is_null() || (generators.is_null() && len > 0) {
            return fail(KkStatus::NullPointer, "null argument");
        }
        let gens = if len == 0 { &[][..] } else { std::slice::from_raw_parts(generators, len) };
        match NumericalSemigroup::new(gens) {
            Ok(s) => {
                *out = Box::into_raw(Box::new(KkSemigroup { inner: s }));
                KkStatus::Ok
            }
            Err(e) => fail(semigroup_status(&e), e),
        }
    })
}

/// # Safety
/// `s` must be null or a handle from this library that is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn kk_semigroup_free(s: *mut KkSemigroup) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kk_semigroup_invariants(s: *const KkSemigroup, out: *mut KkInvariants) -> KkStatus {
    guard(|| {
        let (Some(s), false) = (s.as_ref(), out.is_null()) else {
            return fail(KkStatus::NullPointer, "null argument");
        };
        let s = &s.inner;
        *out = KkInvariants {
            multiplicity: s.multiplicity(),
            embedding_dimension: s.embedding_dimension() as u64,
            codimension: s.codimension(),
            frobenius: s.frobenius().map_or(-1, |f| f as i64),
        };
        KkStatus::Ok
    })
}

/// Minimal generators, ascending. `*len` is set to the count even when the
/// buffer is too small.
///
/// # Safety
/// `s` must be a live handle, `buf` must have room for `cap` values, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn kk_semigroup_generators(
    s: *const KkSemigroup,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> KkStatus {
    guard(|| match s.as_ref() {
        Some(s) => copy_out(s.inner.generators(), buf, cap, len),
        None => fail(KkStatus::NullPointer, "null semigroup"),
    })
}

/// Apéry set with respect to the multiplicity, indexed by residue.
///
/// # Safety
/// As for [`kk_semigroup_generators`].
#[no_mangle]
pub unsafe extern "C" fn kk_semigroup_apery(s: *const KkSemigroup, buf: *mut u64, cap: usize, len: *mut usize) -> KkStatus {
    guard(|| match s.as_ref() {
        Some(s) => copy_out(s.inner.apery_set().elements(), buf, cap, len),
        None => fail(KkStatus::NullPointer, "null semigroup"),
    })
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kk_semigroup_contains(s: *const KkSemigroup, n: u64, out: *mut bool) -> KkStatus {
    guard(|| {
        let (Some(s), false) = (s.as_ref(), out.is_null()) else {
            return fail(KkStatus::NullPointer, "null argument");
        };
        *out = s.inner.contains(n);
        KkStatus::Ok
    })
}

/// Minimal presentation cardinality through the Kunz nilsemigroup.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kk_semigroup_eta(s: *const KkSemigroup, out: *mut u64) -> KkStatus {
    guard(|| {
        let (Some(s), false) = (s.as_ref(), out.is_null()) else {
            return fail(KkStatus::NullPointer, "null argument");
        };
        if s.inner.multiplicity() == 1 {
            *out = 0;
            return KkStatus::Ok;
        }
        match KunzNilsemigroup::from_semigroup(&s.inner) {
            Ok(n) => {
                *out = n.eta().eta as u64;
                KkStatus::Ok
            }
            Err(e) => fail(kunz_status(&e), e),
        }
    })
}

/// Minimal presentation cardinality by scanning factorization graphs.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kk_semigroup_eta_direct(s: *const KkSemigroup, out: *mut u64) -> KkStatus {
    guard(|| {
        let (Some(s), false) = (s.as_ref(), out.is_null()) else {
            return fail(KkStatus::NullPointer, "null argument");
        };
        if s.inner.multiplicity() == 1 {
            *out = 0;
            return KkStatus::Ok;
        }
        match s.inner.eta_direct() {
            Ok(eta) => {
                *out = eta as u64;
                KkStatus::Ok
            }
            Err(e) => fail(semigroup_status(&e), e),
        }
    })
}

/// The `info --format json` document; free it with [`kk_string_free`].
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kk_semigroup_info_json(s: *const KkSemigroup, out: *mut *mut c_char) -> KkStatus {
    guard(|| {
        let (Some(s), false) = (s.as_ref(), out.is_null()) else {
            return fail(KkStatus::NullPointer, "null argument");
        };
        match kunzkit::cli::info_document(s.inner.generators()) {
            Ok(doc) => emit_string(doc.to_string(), out),
            Err(f) if f.code == kunzkit::cli::EXIT_USAGE => fail(KkStatus::InvalidArgument, f.message),
            Err(f) => fail(KkStatus::Internal, f.message),
        }
    })
}

/// Builds a verified family member. Parameters a family does not use are
/// ignored; pass 0 for those. `extend` needs [`kk_family_extend`].
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kk_family(
    name: *const c_char,
    m: u64,
    e: u64,
    r: u64,
    s: u64,
    eta: u64,
    out: *mut *mut KkSemigroup,
) -> KkStatus {
    guard(|| {
        if name.is_null() || out.is_null() {
            return fail(KkStatus::NullPointer, "null argument");
        }
        let Ok(name) = CStr::from_ptr(name).to_str() else {
            return fail(KkStatus::InvalidArgument, "family name is not UTF-8");
        };
        let family: FamilyName = match name.parse() {
            Ok(f) => f,
            Err(err) => return fail(KkStatus::InvalidArgument, err),
        };
        let member = match family {
            FamilyName::MaxEmbdim => families::max_embdim(m),
            FamilyName::Rosales => families::rosales(m, e),
            FamilyName::Interval => families::interval(e, r, s),
            FamilyName::ExtraBetti => families::extra_betti(e, r),
            FamilyName::Eta3 => families::eta3(m),
            FamilyName::Embdim4 => families::embdim4(m, eta),
            FamilyName::Fixture => families::fixture_extra_betti_e4(),
            FamilyName::Extend => return fail(KkStatus::InvalidArgument, "use kk_family_extend"),
        };
        match member {
            Ok(f) => box_member(f, out),
            Err(err) => fail(family_status(&err), err),
        }
    })
}

/// `m·ℕ + (m+1)·base`, raising `e` and `η` by one.
///
/// # Safety
/// `base` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kk_family_extend(base: *const KkSemigroup, m: u64, out: *mut *mut KkSemigroup) -> KkStatus {
    guard(|| {
        let (Some(base), false) = (base.as_ref(), out.is_null()) else {
            return fail(KkStatus::NullPointer, "null argument");
        };
        match families::extend_eta(&base.inner, m) {
            Ok(f) => box_member(f, out),
            Err(err) => fail(family_status(&err), err),
        }
    })
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kk_nilsemigroup_from_semigroup(s: *const KkSemigroup, out: *mut *mut KkNilsemigroup) -> KkStatus {
    guard(|| {
        let (Some(s), false) = (s.as_ref(), out.is_null()) else {
            return fail(KkStatus::NullPointer, "null argument");
        };
        match KunzNilsemigroup::from_semigroup(&s.inner) {
            Ok(n) => {
                *out = Box::into_raw(Box::new(KkNilsemigroup { inner: n }));
                KkStatus::Ok
            }
            Err(e) => fail(kunz_status(&e), e),
        }
    })
}

/// # Safety
/// `n` must be null or a handle from this library that is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn kk_nilsemigroup_free(n: *mut KkNilsemigroup) {
    if !n.is_null() {
        drop(Box::from_raw(n));
    }
}

/// # Safety
/// `n` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kk_nilsemigroup_summary(n: *const KkNilsemigroup, out: *mut KkNilSummary) -> KkStatus {
    guard(|| {
        let (Some(n), false) = (n.as_ref(), out.is_null()) else {
            return fail(KkStatus::NullPointer, "null argument");
        };
        let n = &n.inner;
        let summary = n.eta();
        *out = KkNilSummary {
            multiplicity: n.multiplicity() as u64,
            embedding_dimension: n.embedding_dimension() as u64,
            outer_betti: summary.outer_betti_count as u64,
            nil_trades: summary.trades.len() as u64,
            eta: summary.eta as u64,
        };
        KkStatus::Ok
    })
}

/// Hasse diagram of the Kunz poset in DOT; free it with [`kk_string_free`].
///
/// # Safety
/// `n` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kk_nilsemigroup_dot(n: *const KkNilsemigroup, out: *mut *mut c_char) -> KkStatus {
    guard(|| {
        let (Some(n), false) = (n.as_ref(), out.is_null()) else {
            return fail(KkStatus::NullPointer, "null argument");
        };
        emit_string(n.inner.kunz_poset().to_dot(), out)
    })
}

//! C ABI for the chiplet-cost model.
//!
//! Conventions: every function returns a [`ChipcostStatus`]; results come
//! back through out-pointers. Catalog handles are opaque and freed with
//! [`chipcost_catalog_free`]; returned strings are freed with
//! [`chipcost_string_free`]. On any non-OK status the thread-local message
//! retrieved by [`chipcost_last_error_message`] describes the failure.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use chiplet_cost::catalog::{load_catalog, Catalog};
use chiplet_cost::config;
use chiplet_cost::error::Error;
use chiplet_cost::reuse::analyze_systems;
use chiplet_cost::yield_model;

/// Opaque catalog handle.
pub struct ChipcostCatalog {
    inner: Catalog,
}

/// Status codes returned by every FFI entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChipcostStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A document failed to parse or violated an invariant.
    ParseError = 3,
    /// A name did not resolve against the catalog or spec.
    UnknownReference = 4,
    /// The model rejected the inputs (domain error).
    ComputeError = 5,
    /// An exact integer result exceeded the output type.
    Overflow = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> ChipcostStatus {
    match err {
        Error::Parse { .. } | Error::InvariantViolation { .. } => ChipcostStatus::ParseError,
        Error::UnknownNodeReference { .. }
        | Error::UnknownTechReference { .. }
        | Error::UnknownChipletReference { .. }
        | Error::UnknownSystemReference { .. } => ChipcostStatus::UnknownReference,
        Error::CountOverflow { .. } => ChipcostStatus::Overflow,
        _ => ChipcostStatus::ComputeError,
    }
}

fn fail(err: &Error) -> ChipcostStatus {
    set_error(&err.to_string());
    status_of(err)
}

/// # Safety
/// `s` must be null or a valid NUL-terminated C string.
unsafe fn utf8_arg<'a>(s: *const c_char) -> Result<&'a str, ChipcostStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(ChipcostStatus::NullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        ChipcostStatus::InvalidUtf8
    })
}

/// Library version as a static string; never freed by the caller.
#[no_mangle]
pub extern "C" fn chipcost_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message describing the most recent failure on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn chipcost_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Create a handle to the built-in default catalog.
///
/// # Safety
/// `out` must be a valid pointer to a catalog-handle slot.
#[no_mangle]
pub unsafe extern "C" fn chipcost_catalog_default(
    out: *mut *mut ChipcostCatalog,
) -> ChipcostStatus {
    if out.is_null() {
        set_error("null out pointer");
        return ChipcostStatus::NullArgument;
    }
    let handle = Box::new(ChipcostCatalog {
        inner: Catalog::builtin_default(),
    });
    *out = Box::into_raw(handle);
    ChipcostStatus::Ok
}

/// Load a catalog from a JSON document.
///
/// # Safety
/// `json` must be a valid NUL-terminated C string; `out` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn chipcost_catalog_from_json(
    json: *const c_char,
    out: *mut *mut ChipcostCatalog,
) -> ChipcostStatus {
    if out.is_null() {
        set_error("null out pointer");
        return ChipcostStatus::NullArgument;
    }
    let text = match utf8_arg(json) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match load_catalog(text) {
        Ok(loaded) => {
            *out = Box::into_raw(Box::new(ChipcostCatalog {
                inner: loaded.catalog,
            }));
            ChipcostStatus::Ok
        }
        Err(err) => fail(&err),
    }
}

/// Release a catalog handle. Null is a no-op.
///
/// # Safety
/// `catalog` must be null or a pointer obtained from a catalog constructor,
/// not freed before.
#[no_mangle]
pub unsafe extern "C" fn chipcost_catalog_free(catalog: *mut ChipcostCatalog) {
    if !catalog.is_null() {
        drop(Box::from_raw(catalog));
    }
}

unsafe fn catalog_ref<'a>(
    catalog: *const ChipcostCatalog,
) -> Result<&'a Catalog, ChipcostStatus> {
    if catalog.is_null() {
        set_error("null catalog handle");
        return Err(ChipcostStatus::NullArgument);
    }
    Ok(&(*catalog).inner)
}

/// Die yield of an `area_mm2` die on the named node.
///
/// # Safety
/// `catalog` must be a live handle; `node` a C string; `out` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn chipcost_die_yield(
    catalog: *const ChipcostCatalog,
    node: *const c_char,
    area_mm2: f64,
    out: *mut f64,
) -> ChipcostStatus {
    if out.is_null() {
        set_error("null out pointer");
        return ChipcostStatus::NullArgument;
    }
    let cat = match catalog_ref(catalog) {
        Ok(c) => c,
        Err(s) => return s,
    };
    let name = match utf8_arg(node) {
        Ok(n) => n,
        Err(s) => return s,
    };
    match cat.node(name).and_then(|n| yield_model::die_yield(area_mm2, n)) {
        Ok(y) => {
            *out = y;
            ChipcostStatus::Ok
        }
        Err(err) => fail(&err),
    }
}

/// Whole dies per wafer for an `area_mm2` die on the named node.
///
/// # Safety
/// Same contract as [`chipcost_die_yield`].
#[no_mangle]
pub unsafe extern "C" fn chipcost_dies_per_wafer(
    catalog: *const ChipcostCatalog,
    node: *const c_char,
    area_mm2: f64,
    aspect_ratio: f64,
    out: *mut u64,
) -> ChipcostStatus {
    if out.is_null() {
        set_error("null out pointer");
        return ChipcostStatus::NullArgument;
    }
    let cat = match catalog_ref(catalog) {
        Ok(c) => c,
        Err(s) => return s,
    };
    let name = match utf8_arg(node) {
        Ok(n) => n,
        Err(s) => return s,
    };
    match cat
        .node(name)
        .and_then(|n| yield_model::dies_per_wafer(area_mm2, n, aspect_ratio))
    {
        Ok(count) => {
            *out = count;
            ChipcostStatus::Ok
        }
        Err(err) => fail(&err),
    }
}

/// Number of distinct systems from `kinds` chiplet kinds and `sockets`
/// package sockets (multisets of sizes 1..=sockets). Returns `Overflow` when
/// the exact count does not fit in 64 bits.
///
/// # Safety
/// `out` must be a valid slot.
#[no_mangle]
pub unsafe extern "C" fn chipcost_fsmc_count(
    kinds: u64,
    sockets: u64,
    out: *mut u64,
) -> ChipcostStatus {
    if out.is_null() {
        set_error("null out pointer");
        return ChipcostStatus::NullArgument;
    }
    match chiplet_cost::reuse::fsmc_count(kinds, sockets) {
        Ok(count) => match u64::try_from(count) {
            Ok(v) => {
                *out = v;
                ChipcostStatus::Ok
            }
            Err(_) => {
                set_error("combination count exceeds 64 bits");
                ChipcostStatus::Overflow
            }
        },
        Err(err) => fail(&err),
    }
}

/// Cost every system of a spec document (one shared production group) and
/// return the analysis as a JSON string: per-system breakdowns, the NRE
/// ledger and scenario aggregates.
///
/// # Safety
/// `catalog` must be a live handle, `spec_json` a C string, `out_json` a
/// valid slot. The returned string is freed with [`chipcost_string_free`].
#[no_mangle]
pub unsafe extern "C" fn chipcost_analyze_json(
    catalog: *const ChipcostCatalog,
    spec_json: *const c_char,
    out_json: *mut *mut c_char,
) -> ChipcostStatus {
    if out_json.is_null() {
        set_error("null out pointer");
        return ChipcostStatus::NullArgument;
    }
    let cat = match catalog_ref(catalog) {
        Ok(c) => c,
        Err(s) => return s,
    };
    let text = match utf8_arg(spec_json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let analysis = config::parse_spec(text)
        .and_then(|doc| config::resolve_spec(&doc, cat))
        .and_then(|resolved| {
            if resolved.systems.is_empty() {
                Err(Error::EmptySystem)
            } else {
                analyze_systems(&resolved.systems)
            }
        });
    match analysis {
        Ok(a) => {
            let json = serde_json::to_string(&a).expect("analysis serializes");
            let c = CString::new(json).expect("JSON has no NUL bytes");
            *out_json = c.into_raw();
            ChipcostStatus::Ok
        }
        Err(err) => fail(&err),
    }
}

/// Free a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a pointer returned by this library, not freed before.
#[no_mangle]
pub unsafe extern "C" fn chipcost_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

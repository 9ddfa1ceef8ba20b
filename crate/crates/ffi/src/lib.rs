//! C ABI surface for the eulerian library.
//!
//! Handles are opaque pointers created and destroyed by this library.
//! Functions return an [`EulerianStatus`] code; string results are
//! heap-allocated UTF-8, owned by the caller, and must be released with
//! [`eulerian_string_free`]. All functions are safe to call from multiple
//! threads on the same context.

use eulerian::{Context, EnumCaps, EulerianError, FamilyKind, FamilySpec, Sign};
use std::ffi::{c_char, CStr, CString};
use std::str::FromStr;

/// Result codes for every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerianStatus {
    Ok = 0,
    /// Null pointer, malformed UTF-8, or an unknown family/method name.
    InvalidArgument = 1,
    /// Parameters outside the family's domain.
    OutOfRange = 2,
    /// Requested enumeration exceeds the configured cap.
    CapExceeded = 3,
    /// Verification ran and produced at least one failing entry.
    VerificationFailed = 4,
}

/// Opaque computation context holding caps and memo tables.
pub struct EulerianCtx {
    inner: Context,
}

/// Create a context with the default enumeration caps (n <= 11 for unsigned
/// families, n <= 9 for signed ones).
#[no_mangle]
pub extern "C" fn eulerian_ctx_new() -> *mut EulerianCtx {
    Box::into_raw(Box::new(EulerianCtx { inner: Context::new() }))
}

/// Create a context with explicit enumeration caps.
#[no_mangle]
pub extern "C" fn eulerian_ctx_new_with_caps(cap_a: u32, cap_b: u32) -> *mut EulerianCtx {
    Box::into_raw(Box::new(EulerianCtx {
        inner: Context::with_caps(EnumCaps { type_a: cap_a, type_b: cap_b }),
    }))
}

/// Destroy a context. Passing null is a no-op.
///
/// # Safety
/// `ctx` must be null or a pointer previously returned by a constructor,
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn eulerian_ctx_free(ctx: *mut EulerianCtx) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Release a string returned by this library. Passing null is a no-op.
///
/// # Safety
/// `s` must be null or a pointer previously handed out by this library,
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn eulerian_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn write_out(out: *mut *mut c_char, value: String) -> EulerianStatus {
    match CString::new(value) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            EulerianStatus::Ok
        }
        Err(_) => EulerianStatus::InvalidArgument,
    }
}

fn status_of(err: &EulerianError) -> EulerianStatus {
    match err {
        EulerianError::CapExceeded { .. } => EulerianStatus::CapExceeded,
        _ => EulerianStatus::OutOfRange,
    }
}

unsafe fn parse_spec(
    family: *const c_char,
    n: u32,
    last: i32,
    sign: c_char,
) -> Result<FamilySpec, EulerianStatus> {
    if family.is_null() {
        return Err(EulerianStatus::InvalidArgument);
    }
    let family = CStr::from_ptr(family)
        .to_str()
        .map_err(|_| EulerianStatus::InvalidArgument)?;
    let kind = FamilyKind::from_str(family).map_err(|_| EulerianStatus::InvalidArgument)?;
    let last = if kind.is_restricted() { Some(last) } else { None };
    let sign = if kind.is_half() {
        Some(match sign as u8 {
            b'+' => Sign::Plus,
            b'-' => Sign::Minus,
            _ => return Err(EulerianStatus::InvalidArgument),
        })
    } else {
        None
    };
    FamilySpec::new(kind, n, last, sign).map_err(|_| EulerianStatus::OutOfRange)
}

/// Compute one polynomial and return it as a JSON object
/// `{"family", "n", "last"?, "sign"?, "method", "coeffs"}` with coefficients
/// as decimal strings in ascending degree order.
///
/// `family` is one of `A`, `B`, `D`, `A_restricted`, `B_restricted`,
/// `D_restricted`, `B_half`, `D_half`. `last` is ignored unless the family
/// is restricted; `sign` (`'+'` or `'-'`) is ignored unless the family is a
/// half family. `method` is `enumerate` or `identity`.
///
/// # Safety
/// `ctx` must be a live context pointer; `family`, `method` must be valid
/// NUL-terminated strings; `out_json` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn eulerian_compute_json(
    ctx: *const EulerianCtx,
    family: *const c_char,
    n: u32,
    last: i32,
    sign: c_char,
    method: *const c_char,
    out_json: *mut *mut c_char,
) -> EulerianStatus {
    if ctx.is_null() || method.is_null() || out_json.is_null() {
        return EulerianStatus::InvalidArgument;
    }
    let spec = match parse_spec(family, n, last, sign) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let method = match CStr::from_ptr(method).to_str() {
        Ok(m) => m,
        Err(_) => return EulerianStatus::InvalidArgument,
    };
    let ctx = &(*ctx).inner;
    let result = match method {
        "enumerate" => ctx.poly_by_enumeration(&spec),
        "identity" => ctx.poly_by_identity(&spec),
        _ => return EulerianStatus::InvalidArgument,
    };
    let poly = match result {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    let mut obj = serde_json::Map::new();
    obj.insert("family".into(), spec.kind().as_str().into());
    obj.insert("n".into(), spec.n().into());
    if let Some(last) = spec.last() {
        obj.insert("last".into(), last.into());
    }
    if let Some(sign) = spec.sign() {
        obj.insert("sign".into(), sign.as_str().into());
    }
    obj.insert("method".into(), method.into());
    obj.insert(
        "coeffs".into(),
        poly.to_decimal_strings()
            .into_iter()
            .map(serde_json::Value::from)
            .collect::<Vec<_>>()
            .into(),
    );
    write_out(out_json, serde_json::Value::Object(obj).to_string())
}

/// Run the full identity registry with one rank bound per cost class and
/// return the JSON report. Returns `VerificationFailed` if any entry FAILed
/// (observed disagreements on registered claims do not count).
///
/// # Safety
/// `ctx` must be a live context pointer and `out_json` a valid writable
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn eulerian_verify_all(
    ctx: *const EulerianCtx,
    cheap_max: u32,
    oracle_max: u32,
    out_json: *mut *mut c_char,
) -> EulerianStatus {
    if ctx.is_null() || out_json.is_null() {
        return EulerianStatus::InvalidArgument;
    }
    let report = match eulerian::run_all(&(*ctx).inner, cheap_max, oracle_max) {
        Ok(r) => r,
        Err(_) => return EulerianStatus::OutOfRange,
    };
    let failed = report.has_failures();
    let code = write_out(out_json, report.to_json());
    if code != EulerianStatus::Ok {
        return code;
    }
    if failed {
        EulerianStatus::VerificationFailed
    } else {
        EulerianStatus::Ok
    }
}

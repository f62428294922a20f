//! C ABI for the liftings library.
//!
//! The interface mirrors the CLI: callers hand over the statement text
//! (field/ring/order/weights/ideal), a command name and optional JSON
//! options, and get back an opaque report handle from which the JSON and
//! text renderings can be read. All strings are UTF-8, NUL-terminated;
//! strings returned for a report stay valid until the report is freed.
//!
//! Status codes follow the CLI exit codes: 0 success, 1 invalid call
//! (null pointer, bad UTF-8, unknown command), 2 parse error,
//! 3 precondition error, 4 theorem-violation/internal-consistency,
//! 5 specialization failure.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};

use liftings::job::{self, Command, JobOptions};

pub const LIFTINGS_OK: c_int = 0;
pub const LIFTINGS_ERR_INVALID: c_int = 1;
pub const LIFTINGS_ERR_PARSE: c_int = 2;
pub const LIFTINGS_ERR_PRECONDITION: c_int = 3;
pub const LIFTINGS_ERR_THEOREM: c_int = 4;
pub const LIFTINGS_ERR_SPECIALIZATION: c_int = 5;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(sanitized).unwrap());
}

/// An executed job: the report plus its cached renderings.
pub struct LiftingsReport {
    json: CString,
    text: CString,
}

/// Options accepted as JSON by [`liftings_run`]. Every field is optional.
#[derive(serde::Deserialize, Default)]
struct FfiOptions {
    order: Option<String>,
    order2: Option<String>,
    t_values: Option<Vec<i64>>,
    scalars: Option<String>,
    seed: Option<u64>,
    m: Option<i64>,
    var: Option<String>,
}

unsafe fn cstr<'a>(p: *const c_char) -> Option<&'a str> {
    if p.is_null() {
        return None;
    }
    unsafe { CStr::from_ptr(p) }.to_str().ok()
}

/// Runs a command on statement text. On success writes a fresh report
/// handle to `out` and returns 0; otherwise returns an error status and
/// leaves a message for [`liftings_last_error`].
///
/// # Safety
/// `input` and `command` must be valid NUL-terminated strings;
/// `options_json` may be null; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn liftings_run(
    input: *const c_char,
    command: *const c_char,
    options_json: *const c_char,
    out: *mut *mut LiftingsReport,
) -> c_int {
    if out.is_null() {
        set_error("null output pointer");
        return LIFTINGS_ERR_INVALID;
    }
    unsafe { *out = std::ptr::null_mut() };
    let (Some(input), Some(command)) = (unsafe { cstr(input) }, unsafe { cstr(command) }) else {
        set_error("null or non-UTF-8 argument");
        return LIFTINGS_ERR_INVALID;
    };
    let opts: FfiOptions = match unsafe { cstr(options_json) } {
        None => FfiOptions::default(),
        Some(text) if text.trim().is_empty() => FfiOptions::default(),
        Some(text) => match serde_json::from_str(text) {
            Ok(o) => o,
            Err(e) => {
                set_error(&format!("bad options JSON: {e}"));
                return LIFTINGS_ERR_INVALID;
            }
        },
    };
    let command = match Command::parse(command) {
        Ok(c) => c,
        Err(e) => {
            set_error(&e.to_string());
            return LIFTINGS_ERR_INVALID;
        }
    };
    let mut options = JobOptions {
        order2: opts.order2,
        scalars: opts.scalars,
        seed: opts.seed.unwrap_or(0),
        truncate_degree: opts.m,
        variable: opts.var,
        ..JobOptions::default()
    };
    if let Some(ts) = opts.t_values {
        options.t_values = ts;
    }
    let result = (|| {
        let mut job = job::parse_job(input, command, options)?;
        if let Some(name) = &opts.order {
            job.order = job::parse_order_name(name)?;
            job.order_label = name.clone();
        }
        job::run(&job)
    })();
    match result {
        Ok(report) => {
            let json = CString::new(report.to_json().replace('\0', " ")).unwrap();
            let text = CString::new(report.to_text().replace('\0', " ")).unwrap();
            let boxed = Box::new(LiftingsReport { json, text });
            unsafe { *out = Box::into_raw(boxed) };
            LIFTINGS_OK
        }
        Err(e) => {
            set_error(&e.to_string());
            e.exit_code() as c_int
        }
    }
}

/// The JSON rendering of a report; valid until the report is freed.
///
/// # Safety
/// `report` must be a live handle returned by [`liftings_run`].
#[no_mangle]
pub unsafe extern "C" fn liftings_report_json(report: *const LiftingsReport) -> *const c_char {
    if report.is_null() {
        return std::ptr::null();
    }
    unsafe { &*report }.json.as_ptr()
}

/// The text rendering of a report; valid until the report is freed.
///
/// # Safety
/// `report` must be a live handle returned by [`liftings_run`].
#[no_mangle]
pub unsafe extern "C" fn liftings_report_text(report: *const LiftingsReport) -> *const c_char {
    if report.is_null() {
        return std::ptr::null();
    }
    unsafe { &*report }.text.as_ptr()
}

/// Releases a report handle. Passing null is a no-op.
///
/// # Safety
/// `report` must be null or a handle returned by [`liftings_run`] that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn liftings_report_free(report: *mut LiftingsReport) {
    if !report.is_null() {
        drop(unsafe { Box::from_raw(report) });
    }
}

/// The message of the most recent error on this thread (empty when none).
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn liftings_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn liftings_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

//! C ABI for the qamar analyzer.
//!
//! The API hands out an opaque analyzer handle and returns results as
//! newly-allocated UTF-8 strings (TSV or JSON). Every string returned by
//! this library must be released with [`qamar_string_free`]; analyzer
//! handles are released with [`qamar_analyzer_free`]. Functions that can
//! fail return an error code or a null pointer and record a message
//! retrievable with [`qamar_last_error`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::path::Path;
use std::sync::Arc;

use libc::c_char;

use qamar_core::{Analyzer, AnalyzerOptions, OutputRecord};

/// Status codes returned by fallible functions.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QamarStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    LexiconError = 3,
}

/// Opaque analyzer handle.
pub struct QamarAnalyzer {
    inner: Analyzer,
}

thread_local! {
    static LAST_ERROR: RefCell<(QamarStatus, Option<CString>)> =
        const { RefCell::new((QamarStatus::Ok, None)) };
}

fn set_last_error(status: QamarStatus, message: String) {
    let message = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = (status, Some(message)));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = (QamarStatus::Ok, None));
}

/// Status code of the most recent call on this thread.
#[no_mangle]
pub extern "C" fn qamar_last_status() -> QamarStatus {
    LAST_ERROR.with(|slot| slot.borrow().0)
}

/// Description of the most recent error on this thread, or null when the
/// last call succeeded. The returned string must be freed with
/// [`qamar_string_free`].
#[no_mangle]
pub extern "C" fn qamar_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| match &slot.borrow().1 {
        Some(message) => message.clone().into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Create an analyzer over the compiled-in seed lexicon. Never fails.
#[no_mangle]
pub extern "C" fn qamar_analyzer_new() -> *mut QamarAnalyzer {
    clear_last_error();
    let analyzer = Analyzer::bundled();
    Box::into_raw(Box::new(QamarAnalyzer { inner: analyzer }))
}

/// Create an analyzer from a lexicon directory.
///
/// Returns null on failure; consult [`qamar_last_error`].
///
/// # Safety
/// `lexicon_dir` must be a valid NUL-terminated UTF-8 path or null (null
/// falls back to the compiled-in seed).
#[no_mangle]
pub unsafe extern "C" fn qamar_analyzer_new_with_lexicon(
    lexicon_dir: *const c_char,
) -> *mut QamarAnalyzer {
    clear_last_error();
    if lexicon_dir.is_null() {
        return qamar_analyzer_new();
    }
    let dir = match CStr::from_ptr(lexicon_dir).to_str() {
        Ok(dir) => dir,
        Err(_) => {
            set_last_error(
                QamarStatus::InvalidUtf8,
                "lexicon directory path is not valid UTF-8".to_string(),
            );
            return std::ptr::null_mut();
        }
    };
    match qamar_core::load_bundle(Path::new(dir)) {
        Ok(bundle) => {
            let analyzer = Analyzer::new(Arc::new(bundle), AnalyzerOptions::default());
            Box::into_raw(Box::new(QamarAnalyzer { inner: analyzer }))
        }
        Err(error) => {
            set_last_error(QamarStatus::LexiconError, error.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Release an analyzer handle.
///
/// # Safety
/// `analyzer` must be a pointer returned by one of the constructors, not
/// yet freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qamar_analyzer_free(analyzer: *mut QamarAnalyzer) {
    if !analyzer.is_null() {
        drop(Box::from_raw(analyzer));
    }
}

unsafe fn analyze_to_records(
    analyzer: *const QamarAnalyzer,
    text: *const c_char,
) -> Result<Vec<OutputRecord>, QamarStatus> {
    if analyzer.is_null() || text.is_null() {
        set_last_error(QamarStatus::NullArgument, "null argument".to_string());
        return Err(QamarStatus::NullArgument);
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(text) => text,
        Err(_) => {
            set_last_error(
                QamarStatus::InvalidUtf8,
                "input text is not valid UTF-8".to_string(),
            );
            return Err(QamarStatus::InvalidUtf8);
        }
    };
    let handle = &*analyzer;
    let analyses = handle.inner.analyze(text);
    Ok(analyses
        .iter()
        .map(|a| OutputRecord::from_analysis(a, handle.inner.bundle()))
        .collect())
}

/// Analyze text and return one TSV row per token (columns: surface, tag,
/// category, lemma, root, pattern, features, flags). Returns null on
/// failure. The result must be freed with [`qamar_string_free`].
///
/// # Safety
/// `analyzer` must be a live handle and `text` a NUL-terminated UTF-8
/// string.
#[no_mangle]
pub unsafe extern "C" fn qamar_analyze_tsv(
    analyzer: *const QamarAnalyzer,
    text: *const c_char,
) -> *mut c_char {
    clear_last_error();
    match analyze_to_records(analyzer, text) {
        Ok(records) => {
            let mut out = String::new();
            for record in &records {
                out.push_str(&record.tsv_line());
                out.push('\n');
            }
            CString::new(out)
                .map(CString::into_raw)
                .unwrap_or(std::ptr::null_mut())
        }
        Err(_) => std::ptr::null_mut(),
    }
}

/// Analyze text and return a JSON array of token records. Returns null
/// on failure. The result must be freed with [`qamar_string_free`].
///
/// # Safety
/// `analyzer` must be a live handle and `text` a NUL-terminated UTF-8
/// string.
#[no_mangle]
pub unsafe extern "C" fn qamar_analyze_json(
    analyzer: *const QamarAnalyzer,
    text: *const c_char,
) -> *mut c_char {
    clear_last_error();
    match analyze_to_records(analyzer, text) {
        Ok(records) => {
            let json = serde_json::to_string(&records).expect("records serialize");
            CString::new(json)
                .map(CString::into_raw)
                .unwrap_or(std::ptr::null_mut())
        }
        Err(_) => std::ptr::null_mut(),
    }
}

/// Number of tokens the analyzer finds in `text`; `-1` on error.
///
/// # Safety
/// `analyzer` must be a live handle and `text` a NUL-terminated UTF-8
/// string.
#[no_mangle]
pub unsafe extern "C" fn qamar_token_count(
    analyzer: *const QamarAnalyzer,
    text: *const c_char,
) -> i64 {
    clear_last_error();
    match analyze_to_records(analyzer, text) {
        Ok(records) => records.len() as i64,
        Err(_) => -1,
    }
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned by a qamar function and not
/// yet freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qamar_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

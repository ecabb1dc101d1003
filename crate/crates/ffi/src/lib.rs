//! C interface to `tqchar`.
//!
//! Objects are opaque handles released with their `_free` function. Every
//! fallible call returns a [`TqStatus`]; on failure [`tq_last_error`] describes
//! the problem. Strings handed out by the library are NUL terminated UTF-8 and
//! must be released with [`tq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use tqchar::cartan::{heights, Orientation};
use tqchar::fm::graph_of;
use tqchar::format::{character_to_json, character_to_text, graph_to_dot};
use tqchar::kl::multiplicity;
use tqchar::restrict::{branching, canonical_p, chi_t_ordinary, DominantWeight};
use tqchar::tensor::DrinfeldSpec;
use tqchar::{DynkinDiagram, Engine, Error, QCharacter, Spectral};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed or out-of-range input.
    InvalidInput = 3,
    /// A consistency check, resource limit or cache failure.
    Internal = 4,
    Panic = 5,
}

/// Computation context for one Dynkin diagram.
pub struct TqEngine(Engine);

/// A character with coefficients in `Z[t, t^-1]`.
pub struct TqCharacter(QCharacter);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: TqStatus, msg: &str) -> TqStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> TqStatus {
    let status = if e.is_internal() {
        TqStatus::Internal
    } else {
        TqStatus::InvalidInput
    };
    fail(status, &e.to_string())
}

/// Runs `f`, mapping errors and panics to status codes.
fn guard(f: impl FnOnce() -> Result<(), TqStatus>) -> TqStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TqStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(TqStatus::Panic, "panic inside tqchar"),
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, TqStatus> {
    if p.is_null() {
        return Err(fail(TqStatus::NullPointer, &format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(TqStatus::InvalidUtf8, &format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), TqStatus> {
    if out.is_null() {
        return Err(fail(TqStatus::NullPointer, "output pointer is null"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), TqStatus> {
    if out.is_null() {
        return Err(fail(TqStatus::NullPointer, "output pointer is null"));
    }
    let c = CString::new(s).map_err(|_| fail(TqStatus::Internal, "output contains NUL"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn engine_ref<'a>(e: *const TqEngine) -> Result<&'a Engine, TqStatus> {
    e.as_ref()
        .map(|x| &x.0)
        .ok_or_else(|| fail(TqStatus::NullPointer, "engine is null"))
}

unsafe fn character_ref<'a>(c: *const TqCharacter) -> Result<&'a QCharacter, TqStatus> {
    c.as_ref()
        .map(|x| &x.0)
        .ok_or_else(|| fail(TqStatus::NullPointer, "character is null"))
}

fn parse_spec(engine: &Engine, s: &str) -> Result<DrinfeldSpec, TqStatus> {
    let spec = DrinfeldSpec::parse_any(s).map_err(from_error)?;
    spec.0.check_vertices(engine.diagram()).map_err(from_error)?;
    Ok(spec)
}

/// Message for the most recent failure on this thread; empty after a
/// success. Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn tq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates an engine for a diagram such as `"D4"`. `cache_dir` may be null
/// for an in-memory cache only.
///
/// # Safety
/// `diagram` and a non-null `cache_dir` must be NUL terminated strings and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tq_engine_new(
    diagram: *const c_char,
    cache_dir: *const c_char,
    out: *mut *mut TqEngine,
) -> TqStatus {
    guard(|| {
        let d: DynkinDiagram = read_str(diagram, "diagram")?.parse().map_err(from_error)?;
        let mut engine = Engine::new(d);
        if !cache_dir.is_null() {
            engine = engine.with_cache_dir(read_str(cache_dir, "cache_dir")?);
        }
        write_out(out, TqEngine(engine))
    })
}

/// Sets the cap on monomials created by a single computation.
///
/// # Safety
/// `engine` must come from [`tq_engine_new`].
#[no_mangle]
pub unsafe extern "C" fn tq_engine_set_max_monomials(engine: *mut TqEngine, limit: usize) -> TqStatus {
    guard(|| {
        let e = engine
            .as_mut()
            .ok_or_else(|| fail(TqStatus::NullPointer, "engine is null"))?;
        e.0.set_max_monomials(limit);
        Ok(())
    })
}

/// # Safety
/// `engine` must come from [`tq_engine_new`] or be null.
#[no_mangle]
pub unsafe extern "C" fn tq_engine_free(engine: *mut TqEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Character of the l-fundamental module at `node` and point `eps^step`.
///
/// # Safety
/// `engine` must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tq_fundamental(
    engine: *const TqEngine,
    node: u32,
    step: i32,
    out: *mut *mut TqCharacter,
) -> TqStatus {
    guard(|| {
        let e = engine_ref(engine)?;
        let chi = e
            .fundamental(node as usize, Spectral::new(0, step))
            .map_err(from_error)?;
        write_out(out, TqCharacter(chi))
    })
}

/// Character of the standard module with Drinfeld polynomial `spec`, given
/// as text (`"2:1^2 1:0"`) or as a JSON list of `{node, orbit, step, mult}`.
///
/// # Safety
/// `engine` must be live, `spec` NUL terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tq_standard(
    engine: *const TqEngine,
    spec: *const c_char,
    out: *mut *mut TqCharacter,
) -> TqStatus {
    guard(|| {
        let e = engine_ref(engine)?;
        let p = parse_spec(e, read_str(spec, "spec")?)?;
        let chi = e.standard(&p.0).map_err(from_error)?;
        write_out(out, TqCharacter(chi))
    })
}

/// Number of monomials, or 0 for a null handle.
///
/// # Safety
/// `chi` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn tq_character_len(chi: *const TqCharacter) -> usize {
    chi.as_ref().map_or(0, |c| c.0.len())
}

/// # Safety
/// `chi` must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tq_character_to_json(chi: *const TqCharacter, out: *mut *mut c_char) -> TqStatus {
    guard(|| write_string(out, character_to_json(character_ref(chi)?)))
}

/// # Safety
/// `chi` must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tq_character_to_text(chi: *const TqCharacter, out: *mut *mut c_char) -> TqStatus {
    guard(|| {
        let s = character_to_text(character_ref(chi)?).map_err(from_error)?;
        write_string(out, s)
    })
}

/// # Safety
/// `chi` must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tq_character_to_dot(chi: *const TqCharacter, out: *mut *mut c_char) -> TqStatus {
    guard(|| write_string(out, graph_to_dot(&graph_of(character_ref(chi)?))))
}

/// # Safety
/// `chi` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn tq_character_free(chi: *mut TqCharacter) {
    if !chi.is_null() {
        drop(Box::from_raw(chi));
    }
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn tq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `[M_P : L_Q]` for Drinfeld polynomials `p` and `q`.
///
/// # Safety
/// `engine` must be live, the strings NUL terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tq_multiplicity(
    engine: *const TqEngine,
    p: *const c_char,
    q: *const c_char,
    out: *mut i64,
) -> TqStatus {
    guard(|| {
        let e = engine_ref(engine)?;
        let p = parse_spec(e, read_str(p, "p")?)?;
        let q = parse_spec(e, read_str(q, "q")?)?;
        let m = multiplicity(e, &p.0, &q.0).map_err(from_error)?;
        if out.is_null() {
            return Err(fail(TqStatus::NullPointer, "output pointer is null"));
        }
        *out = m;
        Ok(())
    })
}

/// Branching of the restriction of the canonical standard module of `weight`
/// (`"0,1,0,0"`), as a JSON list of `{weight, z, c}`. `orientation` such as
/// `"1>2,2>3"` may be null for the default.
///
/// # Safety
/// `engine` must be live, the strings NUL terminated or null where allowed,
/// and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tq_branching_json(
    engine: *const TqEngine,
    weight: *const c_char,
    orientation: *const c_char,
    out: *mut *mut c_char,
) -> TqStatus {
    guard(|| {
        let e = engine_ref(engine)?;
        let d = e.diagram();
        let w: DominantWeight = read_str(weight, "weight")?.parse().map_err(from_error)?;
        w.check(d).map_err(from_error)?;
        let o = if orientation.is_null() {
            Orientation::ascending(d)
        } else {
            Orientation::parse(d, read_str(orientation, "orientation")?).map_err(from_error)?
        };
        let h = heights(d, &o);
        let top = chi_t_ordinary(e, &canonical_p(&w, &h)).map_err(from_error)?;
        let z = branching(e, &h, &w).map_err(from_error)?;
        let rows: Vec<_> = top
            .dominant_weights()
            .into_iter()
            .filter_map(|w1| {
                z.get(&w1).map(|m| {
                    serde_json::json!({
                        "weight": w1.coords(),
                        "z": m,
                        "c": top.coeff_dominant(&w1),
                    })
                })
            })
            .collect();
        write_string(out, serde_json::Value::from(rows).to_string())
    })
}

use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use cyclespec_ffi::*;

struct Handle(*mut CsGraph);

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { cs_graph_free(self.0) }
    }
}

fn last_error() -> String {
    let p = cs_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { cs_string_free(p) };
    s
}

fn petersen() -> Handle {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cs_graph_petersen(&mut g) }, CsStatus::Ok);
    Handle(g)
}

#[test]
fn petersen_invariants() {
    let g = petersen();
    unsafe {
        assert_eq!(cs_graph_vertex_count(g.0), 10);
        assert_eq!(cs_graph_edge_count(g.0), 15);
        let mut a = 0usize;
        assert_eq!(cs_alpha(g.0, &mut a), CsStatus::Ok);
        assert_eq!(a, 4);
        let (mut num, mut den, mut exact) = (0i64, 0i64, 0 as c_int);
        assert_eq!(cs_iota(g.0, &mut num, &mut den, &mut exact), CsStatus::Ok);
        assert_eq!((num, den, exact), (5, 2, 1));
        let mut chi = 0usize;
        assert_eq!(cs_chromatic_number(g.0, &mut chi), CsStatus::Ok);
        assert_eq!(chi, 3);
    }
    assert!(cs_last_error().is_null());
}

#[test]
fn edges_and_graph6_round_trip() {
    let edges: [usize; 10] = [0, 1, 1, 2, 2, 3, 3, 4, 4, 0];
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cs_graph_new(5, edges.as_ptr(), 5, &mut g) }, CsStatus::Ok);
    let g = Handle(g);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { cs_graph_to_graph6(g.0, &mut s) }, CsStatus::Ok);
    let text = take_string(s);
    assert_eq!(text, "Dhc");

    let c = CString::new(text).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { cs_graph_from_graph6(c.as_ptr(), &mut back) }, CsStatus::Ok);
    let back = Handle(back);
    assert_eq!(unsafe { cs_graph_edge_count(back.0) }, 5);
}

#[test]
fn spectrum_of_a_five_cycle() {
    let edges: [usize; 10] = [0, 1, 1, 2, 2, 3, 3, 4, 4, 0];
    let mut g = ptr::null_mut();
    unsafe { cs_graph_new(5, edges.as_ptr(), 5, &mut g) };
    let g = Handle(g);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { cs_cycle_spectrum_json(g.0, &mut s) }, CsStatus::Ok);
    let doc: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(doc["lengths"], serde_json::json!([5]));
    assert_eq!(doc["exact"], true);
    assert_eq!(doc["l"], "1/5");
    assert_eq!(doc["l_odd"], "1/5");
}

#[test]
fn kneser_and_mycielski() {
    let mut k = ptr::null_mut();
    assert_eq!(unsafe { cs_graph_kneser(5, 2, &mut k) }, CsStatus::Ok);
    let k = Handle(k);
    assert_eq!(unsafe { cs_graph_vertex_count(k.0) }, 10);

    let mut m = ptr::null_mut();
    assert_eq!(unsafe { cs_graph_mycielski(k.0, &mut m) }, CsStatus::Ok);
    let m = Handle(m);
    assert_eq!(unsafe { cs_graph_vertex_count(m.0) }, 21);
    let mut chi = 0usize;
    assert_eq!(unsafe { cs_chromatic_number(m.0, &mut chi) }, CsStatus::Ok);
    assert_eq!(chi, 4);
}

#[test]
fn errors_carry_codes_and_messages() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(cs_graph_new(3, [0usize, 0].as_ptr(), 1, &mut g), CsStatus::Validation);
        assert!(g.is_null());
        assert!(!last_error().is_empty());

        let bad = CString::new("D h").unwrap();
        assert_eq!(cs_graph_from_graph6(bad.as_ptr(), &mut g), CsStatus::Parse);
        assert!(last_error().contains("byte 1"), "{}", last_error());

        assert_eq!(cs_graph_from_graph6(ptr::null(), &mut g), CsStatus::NullPointer);
        assert_eq!(cs_graph_new(2, ptr::null(), 1, &mut g), CsStatus::NullPointer);
        assert_eq!(cs_alpha(ptr::null(), &mut 0usize), CsStatus::NullPointer);
        assert_eq!(cs_graph_vertex_count(ptr::null()), 0);

        let p = petersen();
        assert_eq!(cs_alpha(p.0, ptr::null_mut()), CsStatus::NullPointer);

        cs_graph_free(ptr::null_mut());
        cs_string_free(ptr::null_mut());
    }
}

#[test]
fn command_runner() {
    let run = |args: &str| {
        let args = CString::new(args).unwrap();
        let (mut out, mut code) = (ptr::null_mut(), -1 as c_int);
        let status = unsafe { cs_run_json(args.as_ptr(), &mut out, &mut code) };
        let text = if out.is_null() { String::new() } else { take_string(out) };
        (status, code, text)
    };

    let (status, code, text) = run(r#"["--no-log", "check", "--theorem", "recip", "--input", "-", "--help"]"#);
    assert_eq!((status, code), (CsStatus::Ok, 0));
    assert!(text.contains("Usage"));

    let (status, code, text) = run(r#"["--no-log", "bounds", "--sequence", "primes", "--n", "100"]"#);
    assert_eq!((status, code), (CsStatus::Ok, 0), "{text}");
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(doc.to_string().contains("19"));

    let (status, code, _) = run(r#"["--no-log", "no-such-command"]"#);
    assert_eq!(status, CsStatus::Ok);
    assert_eq!(code, 1);
    assert!(!last_error().is_empty());

    let (status, _, _) = run("not json");
    assert_eq!(status, CsStatus::Parse);
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/cyclespec.h")).unwrap();
    assert!(header.contains("#ifndef CYCLESPEC_H"));
    assert!(header.contains("typedef struct CsGraph CsGraph;"));
    assert!(header.contains("CS_STATUS_NULL_POINTER = 1"));
    for name in [
        "cs_last_error",
        "cs_graph_new",
        "cs_graph_from_graph6",
        "cs_graph_kneser",
        "cs_graph_petersen",
        "cs_graph_mycielski",
        "cs_graph_free",
        "cs_graph_vertex_count",
        "cs_graph_edge_count",
        "cs_graph_to_graph6",
        "cs_alpha",
        "cs_iota",
        "cs_chromatic_number",
        "cs_cycle_spectrum_json",
        "cs_run_json",
        "cs_string_free",
    ] {
        assert!(header.contains(&format!("{name}(")), "missing {name}");
    }
}

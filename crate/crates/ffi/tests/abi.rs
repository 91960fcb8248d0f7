use scatdet_ffi::*;
use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

fn family(kind: &str, primes: &[u64]) -> *mut SdFamily {
    let kind = CString::new(kind).unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { sd_family_new(kind.as_ptr(), primes.as_ptr(), primes.len(), &mut out) };
    assert_eq!(st, SdStatus::Ok);
    assert!(!out.is_null());
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sd_last_error_message()) }.to_string_lossy().into_owned()
}

#[test]
fn evaluates_modular_phi() {
    let f = family("modular", &[]);
    let (mut re, mut im) = (0.0, 0.0);
    assert_eq!(unsafe { sd_phi_eval(f, 2.0, 0.0, &mut re, &mut im) }, SdStatus::Ok);
    assert!((re - 1.744_568_082_131_256).abs() < 1e-12 && im == 0.0);
    assert_eq!(unsafe { sd_phi_eval(f, 1.0, 0.0, &mut re, &mut im) }, SdStatus::Singularity);
    assert!(last_error().contains("singular"));
    unsafe { sd_family_free(f) };
}

#[test]
fn central_value_and_head() {
    let f = family("gamma0", &[3]);
    let mut cv = SdCentralValue::default();
    assert_eq!(unsafe { sd_central_value(f, &mut cv) }, SdStatus::Ok);
    assert!((cv.germ_value - 1.0).abs() < 1e-8 && cv.matches && cv.predicted_sign == 1);
    let mut head = SdDirichletHead::default();
    assert_eq!(unsafe { sd_dirichlet_head(f, &mut head) }, SdStatus::Ok);
    assert_eq!((head.cusps, head.g1, head.d1), (2, 3.0, -1.0));
    let mut d = SdDivisor::default();
    assert_eq!(unsafe { sd_count_divisor(f, &mut d) }, SdStatus::Ok);
    assert_eq!((d.zeros, d.poles), (1, 2));
    unsafe { sd_family_free(f) };
}

#[test]
fn germ_buffer() {
    let f = family("gamma0", &[2]);
    let mut order = 0;
    let mut buf = [0.0; 6];
    assert_eq!(unsafe { sd_germ_at(f, 1.0, 6, &mut order, buf.as_mut_ptr(), buf.len()) }, SdStatus::Ok);
    assert_eq!(order, -1);
    assert!(buf[0] != 0.0);
    assert_eq!(
        unsafe { sd_germ_at(f, 1.0, 8, &mut order, buf.as_mut_ptr(), buf.len()) },
        SdStatus::InvalidArgument
    );
    unsafe { sd_family_free(f) };
}

#[test]
fn json_entry_points() {
    let text = CString::new(r#"{"family":"gamma0plus","primes":[2,3,5]}"#).unwrap();
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { sd_family_from_json(text.as_ptr(), &mut f) }, SdStatus::Ok);
    let mut alpha = 0.0;
    assert_eq!(unsafe { sd_corollary_alpha(f, &mut alpha) }, SdStatus::Ok);
    assert!((alpha - (30f64 / std::f64::consts::PI).sqrt()).abs() < 1e-12);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sd_central_value_json(f, &mut s) }, SdStatus::Ok);
    let json = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { sd_string_free(s) };
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["command"], "central-value");
    assert_eq!(v["result"]["predicted_sign"], -1);
    assert_eq!(v["result"]["matches"], true);
    unsafe { sd_family_free(f) };
}

#[test]
fn rejects_bad_input() {
    let mut f = ptr::null_mut();
    let kind = CString::new("gamma0").unwrap();
    let st = unsafe { sd_family_new(kind.as_ptr(), [4u64].as_ptr(), 1, &mut f) };
    assert_eq!(st, SdStatus::Domain);
    assert!(f.is_null());
    assert_eq!(unsafe { sd_family_new(ptr::null(), ptr::null(), 0, &mut f) }, SdStatus::InvalidArgument);
    let bad = CString::new("{not json").unwrap();
    assert_eq!(unsafe { sd_family_from_json(bad.as_ptr(), &mut f) }, SdStatus::InvalidArgument);
    let mut re = 0.0;
    let mut im = 0.0;
    assert_eq!(unsafe { sd_phi_eval(ptr::null(), 2.0, 0.0, &mut re, &mut im) }, SdStatus::InvalidArgument);
    unsafe { sd_family_free(ptr::null_mut()) };
}

#[test]
fn descriptors() {
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { sd_descriptor_new(0, 1, [2u32, 3].as_ptr(), 2, &mut d) }, SdStatus::Ok);
    let mut vol = 0.0;
    assert_eq!(unsafe { sd_descriptor_volume(d, &mut vol) }, SdStatus::Ok);
    assert!((vol - std::f64::consts::PI / 3.0).abs() < 1e-14);
    let (mut floor, mut sine) = (0i64, 0.0);
    assert_eq!(unsafe { sd_trivial_multiplicity(d, 6, &mut floor, &mut sine) }, SdStatus::Ok);
    assert_eq!(floor, 1);
    assert!((sine - 1.0).abs() < 1e-8);
    unsafe { sd_descriptor_free(d) };
    let mut bad = ptr::null_mut();
    assert_eq!(unsafe { sd_descriptor_new(0, 1, [2u32].as_ptr(), 1, &mut bad) }, SdStatus::Domain);
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(sd_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let header = format!("{include}/scatdet.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in
        ["sd_family_new", "sd_phi_eval", "sd_central_value", "sd_last_error_message", "SD_STATUS_SINGULARITY"]
    {
        assert!(text.contains(name), "{name} missing from header");
    }
    for (compiler, lang) in [("cc", "c"), ("c++", "c++")] {
        let out = Command::new(compiler)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang, &header])
            .output()
            .unwrap_or_else(|e| panic!("{compiler} not runnable: {e}"));
        assert!(out.status.success(), "{compiler}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn c_program_links_against_static_library() {
    // target/<profile>/deps/abi-<hash> → target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|p| p.parent()).unwrap();
    let lib = profile_dir.join("libscatdet_ffi.a");
    assert!(lib.exists(), "static library not built at {}", lib.display());
    let dir = env!("CARGO_MANIFEST_DIR");
    let bin = profile_dir.join("scatdet_ffi_smoke");
    let status = Command::new("cc")
        .arg(format!("{dir}/tests/smoke.c"))
        .arg(format!("-I{dir}/include"))
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("match 1"));
}

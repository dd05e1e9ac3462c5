use std::ffi::{CStr, CString};
use std::ptr;

use cyclic_chroma_ffi::*;

fn last_error() -> String {
    let p = cc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { cc_string_free(p) };
    s
}

#[test]
fn construct_and_read_back() {
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { cc_construct(6, 3, &mut c) }, CcStatus::Ok);
    assert_eq!(unsafe { cc_coloring_n(c) }, 6);
    assert_eq!(unsafe { cc_coloring_t(c) }, 3);

    let mut buf = [0usize; 6];
    let mut len = 0;
    assert_eq!(
        unsafe { cc_coloring_colors(c, buf.as_mut_ptr(), buf.len(), &mut len) },
        CcStatus::Ok
    );
    assert_eq!(buf, [1, 2, 3, 2, 1, 2]);

    let mut short = [0usize; 2];
    assert_eq!(
        unsafe { cc_coloring_colors(c, short.as_mut_ptr(), short.len(), &mut len) },
        CcStatus::BufferTooSmall
    );
    assert_eq!(len, 6);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { cc_coloring_to_json(c, &mut json) }, CcStatus::Ok);
    assert_eq!(take_string(json), r#"{"n":6,"t":3,"colors":[1,2,3,2,1,2]}"#);
    unsafe { cc_coloring_free(c) };
}

#[test]
fn infeasible_and_domain_errors() {
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { cc_construct(6, 5, &mut c) }, CcStatus::Infeasible);
    assert!(c.is_null());
    assert_eq!(last_error(), "infeasible: t=5 in forbidden set {5} of C(6)");
    assert_eq!(unsafe { cc_construct(2, 2, &mut c) }, CcStatus::Domain);
    assert_eq!(
        unsafe { cc_construct(5, 3, ptr::null_mut()) },
        CcStatus::NullPointer
    );
}

#[test]
fn verify_reports_violations() {
    let colors = [1usize, 3, 2, 4];
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { cc_coloring_new(4, colors.as_ptr(), colors.len(), &mut c) },
        CcStatus::Ok
    );
    let mut r = ptr::null_mut();
    assert_eq!(
        unsafe { cc_verify(c, CcMode::Cyclic, &mut r) },
        CcStatus::Ok
    );
    assert!(!unsafe { cc_report_valid(r) });
    assert!(unsafe { cc_report_proper(r) });
    assert!(unsafe { cc_report_surjective(r) });
    assert_eq!(unsafe { cc_report_violation_count(r) }, 2);
    let (mut v, mut a, mut b, mut why) = (0, 0, 0, CcReason::NotProper);
    assert_eq!(
        unsafe { cc_report_violation(r, 0, &mut v, &mut a, &mut b, &mut why) },
        CcStatus::Ok
    );
    assert_eq!((v, a, b, why), (2, 1, 3, CcReason::NotCyclicInterval));
    assert_eq!(
        unsafe { cc_report_violation(r, 5, &mut v, &mut a, &mut b, &mut why) },
        CcStatus::Domain
    );
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { cc_report_to_json(r, &mut json) }, CcStatus::Ok);
    assert!(take_string(json).contains(r#""valid":false"#));
    unsafe {
        cc_report_free(r);
        cc_coloring_free(c);
    }
}

#[test]
fn json_records() {
    let good = CString::new(r#"{"n":7,"t":5,"colors":[1,2,1,2,3,4,5]}"#).unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { cc_coloring_from_json(good.as_ptr(), &mut c) },
        CcStatus::Ok
    );
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { cc_decompose_json(c, &mut json) }, CcStatus::Ok);
    let d = take_string(json);
    assert!(d.contains(r#""m":2"#), "{d}");
    assert!(d.contains(r#""psi":[1,5,2,3]"#), "{d}");
    unsafe { cc_coloring_free(c) };

    let bad = CString::new(r#"{"n":4,"t":3,"colors":[1,2,1]}"#).unwrap();
    assert_eq!(
        unsafe { cc_coloring_from_json(bad.as_ptr(), &mut c) },
        CcStatus::Parse
    );
    assert!(last_error().contains("expected 4 colors"));
    assert_eq!(
        unsafe { cc_coloring_from_json(ptr::null(), &mut c) },
        CcStatus::NullPointer
    );
}

#[test]
fn closed_forms_and_search() {
    let mut buf = [0usize; 16];
    let mut len = 0;
    assert_eq!(
        unsafe { cc_theta(8, CcMode::Cyclic, buf.as_mut_ptr(), buf.len(), &mut len) },
        CcStatus::Ok
    );
    assert_eq!(&buf[..len], &[2, 3, 4, 5, 6, 8]);
    assert_eq!(
        unsafe { cc_forbidden_set(10, buf.as_mut_ptr(), buf.len(), &mut len) },
        CcStatus::Ok
    );
    assert_eq!(&buf[..len], &[7, 9]);
    assert_eq!(
        unsafe { cc_theta(5, CcMode::Interval, ptr::null_mut(), 0, &mut len) },
        CcStatus::Ok
    );
    assert_eq!(len, 0);

    let mut chi = 0;
    assert_eq!(unsafe { cc_chi_prime(7, &mut chi) }, CcStatus::Ok);
    assert_eq!(chi, 3);

    let mut yes = true;
    assert_eq!(
        unsafe { cc_contains(6, 5, CcMode::Cyclic, &mut yes) },
        CcStatus::Ok
    );
    assert!(!yes);
    assert_eq!(
        unsafe { cc_exists_search(6, 5, CcMode::Cyclic, 0, &mut yes) },
        CcStatus::Ok
    );
    assert!(!yes);
    assert_eq!(
        unsafe { cc_exists_search(16, 5, CcMode::Cyclic, 0, &mut yes) },
        CcStatus::SearchBound
    );
    assert_eq!(
        unsafe { cc_exists_search(16, 16, CcMode::Cyclic, 16, &mut yes) },
        CcStatus::Ok
    );
    assert!(yes);

    let mut total = 0u64;
    assert_eq!(
        unsafe { cc_count(4, 3, CcMode::Cyclic, 0, &mut total) },
        CcStatus::Ok
    );
    assert_eq!(total, 12);
}

#[test]
fn null_handles_are_tolerated() {
    unsafe {
        cc_coloring_free(ptr::null_mut());
        cc_report_free(ptr::null_mut());
        cc_string_free(ptr::null_mut());
        assert_eq!(cc_coloring_n(ptr::null()), 0);
        assert!(!cc_report_valid(ptr::null()));
    }
    let mut r = ptr::null_mut();
    assert_eq!(
        unsafe { cc_verify(ptr::null(), CcMode::Cyclic, &mut r) },
        CcStatus::NullPointer
    );
}

use std::process::Command;

fn dynred(args: &[&str], cache: Option<&str>) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dynred"));
    cmd.args(args);
    if let Some(c) = cache {
        cmd.env("DYNRED_COEFF_CACHE_ENTRIES", c);
    }
    let out = cmd.output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn cache_cap_does_not_change_output() {
    for args in [
        &["normal-form", "--algebra", "dra", "--n", "3", "--expr", "L[1,2]*L[2,3]*L[3,1]"][..],
        &["central", "--n", "2", "--power", "3"][..],
    ] {
        let (code, full) = dynred(args, None);
        let (capped_code, capped) = dynred(args, Some("8"));
        assert_eq!((code, capped_code), (0, 0));
        assert_eq!(full, capped, "{args:?}");
    }
}

#[test]
fn weyl_normal_form_of_d_x() {
    let (code, out) = dynred(&["normal-form", "--n", "1", "--expr", "D[1,1]*x[1,1]"], None);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 + x[1,1]*D[1,1]");
}

#[test]
fn text_report_has_one_line_per_check() {
    let (code, out) = dynred(&["verify", "rmatrix", "--n", "2", "--format", "text"], None);
    assert_eq!(code, 0);
    assert!(out.lines().count() > 1);
    assert!(out.lines().all(|l| !l.starts_with("FAIL")), "{out}");
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use psc::format::{read_complex, read_poset};
use psc_core::poset::{build_poset, i_reduction};
use psc_core::topology::{order_complex, poset_complex, reduced_homology};
use psc_core::{Limits, PosetKind};
use tempfile::TempDir;

const A5: &str = "format group v1\n# A5\ngroup A5 degree 5\ngen (1 2 3 4 5)\ngen (3 4 5)\n";

const SMALL: &str = "format group v1
group S3 degree 3
gen (1 2 3)
gen (1 2)
group C3 degree 3 helper
gen (1 2 3)
group C3xS3 degree 6
product direct C3 S3
group A5 degree 5 os-index-one
gen (1 2 3 4 5)
gen (3 4 5)
group D8 degree 4
gen (1 2 3 4)
gen (1 3)
";

fn psc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_brown_on_a5() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "a5.grp", A5);
    let o = psc(&["verify", s(&file), "--prime", "2", "--claim", "brown", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let verdicts: Vec<&str> = text.lines().filter(|l| l.starts_with("verdict ")).collect();
    assert_eq!(verdicts.len(), 1);
    assert!(verdicts[0].starts_with("verdict brown A5 p=2 status=verified data={chi=5,modulus=4,residue=1,"));
    assert!(text.starts_with("format report v1\nconfig file="));
    assert!(text.contains("summary verified=1 refuted=0 skipped=0 errors=0"));
}

#[test]
fn group_info_on_a5() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "a5.grp", A5);
    let o = psc(&["group-info", s(&file), "--prime", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "group A5\ndegree 5\norder 60\nsolvable no\nmaterialized yes\nprimes 2,3,5\nprime 2\n  sylow_order 4\n  op_order 1\n  p_rank 2\n"
    );
}

#[test]
fn poset_export_round_trips_through_homology() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "small.grp", SMALL);
    let gf = psc::GroupFile::read(&file).unwrap();
    for (group, prime, kind) in [("A5", "2", "Sp"), ("A5", "2", "iAp"), ("C3xS3", "3", "Ap"), ("D8", "2", "Bp")] {
        let export = dir.path().join(format!("{group}-{kind}.poset"));
        let complex = dir.path().join(format!("{group}-{kind}.complex"));
        let o = psc(&[
            "poset", s(&file), "--group", group, "--prime", prime, "--kind", kind,
            "--export", s(&export), "--complex", s(&complex),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

        let g = gf.build(group, Limits::default()).unwrap();
        let p: u64 = prime.parse().unwrap();
        let kind: PosetKind = kind.parse().unwrap();
        let poset = match kind {
            PosetKind::IAp => i_reduction(&g, &build_poset(&g, p, PosetKind::Ap).unwrap()).unwrap(),
            k => build_poset(&g, p, k).unwrap(),
        };
        let direct = reduced_homology(&poset_complex(&poset));

        let text = std::fs::read_to_string(&export).unwrap();
        let imported = read_poset(&export, &text).unwrap();
        assert_eq!(imported.orders.len(), poset.len());
        assert_eq!(imported.actions.len(), g.generators().len());
        assert_eq!(reduced_homology(&order_complex(&imported.relation)), direct);
        let c = read_complex(&complex, &std::fs::read_to_string(&complex).unwrap()).unwrap();
        assert_eq!(reduced_homology(&c), direct);

        for path in [&export, &complex] {
            let o = psc(&["homology", s(path)]);
            assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
            let out = stdout(&o);
            assert!(out.starts_with("format homology v1\ncomplex vertices "));
            assert!(out.ends_with(&direct.to_string()), "{out}");
        }
    }
}

#[test]
fn a5_sylow_two_homology_lines() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "a5.grp", A5);
    let export = dir.path().join("a5.poset");
    let o = psc(&["poset", s(&file), "--prime", "2", "--kind", "Ap", "--export", s(&export)]);
    assert_eq!(stdout(&o), "Ap p=2 elements=20 covers=15 height=1\n");
    let o = psc(&["homology", s(&export)]);
    assert_eq!(stdout(&o), "format homology v1\ncomplex vertices 20 dimension 1 f 20:15\nH~0 rank 4 torsion -\nH~1 rank 0 torsion -\n");
}

#[test]
fn projective_plane_from_complex_file() {
    let dir = TempDir::new().unwrap();
    let mut text = String::from("format complex v1\nvertices 6\n");
    for f in ["0 1 3", "0 1 5", "0 2 4", "0 2 5", "0 3 4", "1 2 3", "1 2 4", "1 4 5", "2 3 5", "3 4 5"] {
        text.push_str(&format!("s {f}\n"));
    }
    let file = write(&dir, "rp2.complex", &text);
    let o = psc(&["homology", s(&file)]);
    assert_eq!(
        stdout(&o),
        "format homology v1\ncomplex vertices 6 dimension 2 f 6:15:10\nH~0 rank 0 torsion -\nH~1 rank 0 torsion 2\nH~2 rank 0 torsion -\n"
    );
}

#[test]
fn parse_errors_exit_two_with_location() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "bad.grp", "format group v1\ngroup A degree 3\ngen (1 2 7)\n");
    let o = psc(&["group-info", s(&file)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bad.grp:3:10: point 7 outside 1..=3"), "{}", stderr(&o));

    let file = write(&dir, "bad.complex", "format complex v1\nvertices 3\ns 0 x\n");
    let o = psc(&["homology", s(&file)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bad.complex:3:5:"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "a5.grp", A5);
    for args in [
        vec!["verify", s(&file), "--prime", "4", "--claim", "brown"],
        vec!["verify", s(&file), "--prime", "2", "--claim", "nonsense"],
        vec!["verify", s(&file), "--claim", "brown"],
        vec!["poset", s(&file), "--prime", "2", "--kind", "fixed"],
        vec!["group-info", s(&file), "--unknown-flag"],
        vec!["corpus", "--claims", "brown,bogus"],
        vec!["corpus", "--jobs", "0"],
        vec!["group-info", "/nonexistent/file.grp"],
    ] {
        let o = psc(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
    assert_eq!(psc(&["--help"]).status.code(), Some(0));
}

#[test]
fn refuted_and_capacity_exit_codes() {
    let dir = TempDir::new().unwrap();
    // A6 is not among the groups with i_SLV(1) = 1, so pinning it must fail.
    let file = write(&dir, "a6.grp", "format group v1\ngroup A6 degree 6 os-index-one\ngen (1 2 3)\ngen (2 3 4 5 6)\n");
    let o = psc(&["verify", s(&file), "--claim", "os-index", "--no-timing"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("status=refuted data={family=SLV,i1=0,"));

    let file = write(&dir, "a5.grp", A5);
    let args = ["corpus", s(&file), "--claims", "brown,separating", "--max-lattice", "10"];
    assert_eq!(psc(&args).status.code(), Some(0));
    let mut strict = args.to_vec();
    strict.push("--strict");
    let o = psc(&strict);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("verdict separating A5 p=- status=skipped-capacity"));
    assert!(stdout(&o).contains("max_lattice=10"));
}

#[test]
fn retract_and_lemmaprank_name_groups_in_the_file() {
    let dir = TempDir::new().unwrap();
    let text = "format group v1\ngroup C3xS3 degree 6\ngen (1 2 3)\ngen (4 5 6)\ngen (4 5)\ngroup S3 degree 6 helper\ngen (4 5 6)\ngen (4 5)\n";
    let file = write(&dir, "g.grp", text);
    let o = psc(&["verify", s(&file), "--group", "C3xS3", "--prime", "3", "--claim", "retract:S3", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("verdict retract:S3 C3xS3 p=3 status=verified data={hypothesis=holds,"));
    let o = psc(&["verify", s(&file), "--group", "C3xS3", "--prime", "3", "--claim", "lemmaprank:S3", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("verdict lemmaprank:S3 C3xS3 p=3 status=verified data={rank=2,formula=2,"));
    let o = psc(&["verify", s(&file), "--group", "C3xS3", "--prime", "3", "--claim", "retract:Nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn corpus_reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "small.grp", SMALL);
    let run = |jobs: &str, name: &str| {
        let out = dir.path().join(name);
        let json = dir.path().join(format!("{name}.json"));
        let o = psc(&["corpus", s(&file), "--jobs", jobs, "--no-timing", "--output", s(&out), "--json", s(&json)]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        (std::fs::read(&out).unwrap(), std::fs::read(&json).unwrap())
    };
    let a = run("1", "a");
    let b = run("1", "b");
    assert_eq!(a, b);
    let c = run("3", "c");
    let strip = |t: &[u8]| String::from_utf8(t.to_vec()).unwrap().replace("jobs=3", "jobs=1");
    assert_eq!(strip(&a.0), strip(&c.0));

    let text = String::from_utf8(a.0).unwrap();
    assert!(!text.contains(" C3 "), "helper entries are not analysed");
    assert!(text.contains("verdict os-index A5 p=- status=verified data={family=SLV,i1=1,"));
    assert!(!text.contains("separating S3"), "group-level claims only run on nonsolvable groups");
    let json: serde_json::Value = serde_json::from_slice(&a.1).unwrap();
    let lines = text.lines().filter(|l| l.starts_with("verdict ")).count();
    assert_eq!(json["verdicts"].as_array().unwrap().len(), lines);
    assert_eq!(json["summary"]["refuted"], 0);
}

#[test]
fn empty_corpus_is_a_success() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "empty.grp", "format group v1\n");
    let o = psc(&["corpus", s(&file), "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("summary verified=0 refuted=0 skipped=0 errors=0\n"));
}

#[test]
fn in_process_entry_point_matches_binary() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "a5.grp", A5);
    let args = ["psc", "verify", s(&file), "--prime", "5", "--claim", "quillen", "--no-timing"];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = psc::run(args, &mut out, &mut err);
    let o = psc(&args[1..]);
    assert_eq!((Some(code as i32), out), (o.status.code(), o.stdout));
}

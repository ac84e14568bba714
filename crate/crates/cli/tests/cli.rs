use std::process::{Command, Output};

fn gcdwords(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcdwords")).args(args).output().expect("spawn gcdwords")
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap().trim_end()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[test]
fn decode_inverts_encode_through_the_binary() {
    let pairs: Vec<(u32, u32)> =
        (1..=50).flat_map(|p| (1..=50).map(move |q| (p, q))).filter(|&(p, q)| gcd(p, q) == 1).collect();
    std::thread::scope(|scope| {
        for chunk in pairs.chunks(pairs.len().div_ceil(8)) {
            scope.spawn(move || {
                for &(p, q) in chunk {
                    let slope = format!("{q}/{p}");
                    let enc = gcdwords(&["encode", &slope]);
                    assert!(enc.status.success(), "encode {slope}");
                    let dec = gcdwords(&["decode", stdout(&enc)]);
                    assert_eq!(stdout(&dec), slope);
                }
            });
        }
    });
}

#[test]
fn plain_and_run_length_words_agree() {
    assert_eq!(stdout(&gcdwords(&["decode", "ttst"])), stdout(&gcdwords(&["decode", "t2st"])));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["encode", "3/-5"][..],
        &["encode", "three"],
        &["decode", "tsx"],
        &["gridmap", "--N", "4", "--format", "png"],
        &["bogus"],
        &[],
    ] {
        let out = gcdwords(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn domain_errors_exit_two() {
    for args in [
        &["encode", "6/4"][..],
        &["encode", "0/1"],
        &["enumerate", "--n", "31"],
        &["gridmap", "--N", "10001", "--format", "csv"],
        &["trajectory", "2/4"],
    ] {
        let out = gcdwords(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn help_succeeds() {
    let out = gcdwords(&["--help"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("gridmap"));
}

#[test]
fn trajectory_svg_is_well_formed() {
    let out = gcdwords(&["trajectory", "5/8", "--svg"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let doc = roxmltree::Document::parse(&text).unwrap();
    let path = doc.descendants().find(|n| n.attribute("class") == Some("trajectory")).unwrap();
    // 5 + 8 - 1 segments need 13 vertices
    assert_eq!(path.attribute("points").unwrap().split_whitespace().count(), 13);
}

#[test]
fn guide_transcript_matches() {
    let guide = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../book/src/cli.md")).unwrap();
    let mut checked = 0;
    for block in guide.split("```console\n").skip(1) {
        let block = block.split("```").next().unwrap();
        for session in block.split("$ gcdwords ").skip(1) {
            let (cmd, expect) = session.split_once('\n').unwrap();
            if cmd.contains("--out") || expect.is_empty() {
                continue;
            }
            let args: Vec<&str> = cmd.split_whitespace().collect();
            let out = gcdwords(&args);
            assert!(out.status.success(), "{cmd}");
            assert_eq!(std::str::from_utf8(&out.stdout).unwrap(), expect, "{cmd}");
            checked += 1;
        }
    }
    assert!(checked >= 5);
}

use std::fs;
use std::process::{Command, Output};

fn niba(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_niba"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn dump(name: &str) -> String {
    let out = niba(&["preset", "dump", name]);
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn presets_exit_cleanly() {
    for name in ["fmo77", "fmo277", "pc645"] {
        for cmd in ["rates", "dynamics", "sweep"] {
            let out = niba(&[cmd, "--preset", name]);
            // at small eps/2Delta, T_b drops below 277 K
            let expected = if (cmd, name) == ("sweep", "fmo277") {
                2
            } else {
                0
            };
            assert_eq!(
                out.status.code(),
                Some(expected),
                "{cmd} {name}: {}",
                String::from_utf8_lossy(&out.stderr)
            );
        }
    }
}

#[test]
fn above_crossover_temperature_warns() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hot.toml");
    fs::write(
        &path,
        dump("fmo277").replace("temperature_K = 277.0", "temperature_K = 300.0"),
    )
    .unwrap();
    let out = niba(&["rates", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(table.contains("low_temperature_ok       VIOLATED"));
    assert!(table.contains("gamma_inv"), "values are still printed");
}

#[test]
fn bad_configs_exit_with_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    fs::write(
        &path,
        dump("fmo77").replace(
            "tau_fs = 50.0",
            "tau_fs = 50.0\nK = 0.1\nomega_c_cm1 = 160.0",
        ),
    )
    .unwrap();
    let out = niba(&["rates", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("conflicting"));

    let out = niba(&[
        "rates",
        "--config",
        dir.path().join("missing.toml").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = niba(&["sweep", "--preset", "fmo77", "--ratio-max", "1.2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn rates_csv_written_to_out() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rates.csv");
    let out = niba(&[
        "rates",
        "--preset",
        "fmo77",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("# niba rates"));
    assert!(csv.lines().any(|l| l.starts_with("gamma_inv,152.")));
}

#[test]
fn dumped_preset_loads_as_config() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pc645.toml");
    fs::write(&path, dump("pc645")).unwrap();
    let from_file = niba(&["dynamics", "--config", path.to_str().unwrap()]);
    let from_preset = niba(&["dynamics", "--preset", "pc645"]);
    assert_eq!(from_file.stdout, from_preset.stdout);
}

#[test]
fn overrides_apply() {
    let out = niba(&[
        "dynamics",
        "--preset",
        "fmo77",
        "--samples",
        "11",
        "--t-max-fs",
        "500",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<_> = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .collect();
    assert_eq!(rows.len(), 11);
    assert!(rows[10].starts_with("500.000000,"));
}

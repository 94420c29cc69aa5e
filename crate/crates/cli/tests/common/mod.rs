#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use refbench_core::corpus::{load_catalog, load_scenarios, LoadOptions};
use refbench_core::gateway::{prompt_hash, Cassette};
use refbench_core::prompt::{PromptForge, StrategyKind};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn e2e_dir() -> PathBuf {
    fixtures().join("e2e")
}

pub fn refbench() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_refbench"));
    c.env("RUST_LOG", "error");
    c
}

/// Cassette built from the scripted responses and freshly rendered prompts.
pub fn expected_cassette() -> Cassette {
    let dir = e2e_dir();
    let catalog = load_catalog(&fixtures().join("catalog.json")).unwrap();
    let scenarios = load_scenarios(&dir.join("corpus.json"), &catalog, &LoadOptions::default()).unwrap();
    let responses: std::collections::BTreeMap<String, String> =
        serde_json::from_str(&std::fs::read_to_string(dir.join("responses.json")).unwrap()).unwrap();
    let forge = PromptForge::default();
    let mut cassette = Cassette::default();
    for (key, text) in &responses {
        let mut parts = key.split('/');
        let (id, strategy, run) = (parts.next().unwrap(), parts.next().unwrap(), parts.next().unwrap());
        let scenario = scenarios.iter().find(|s| s.id == id).unwrap();
        let strategy: StrategyKind = strategy.parse().unwrap();
        let prompt = forge.render(strategy, scenario, catalog.lookup(&scenario.refactoring_type).unwrap()).unwrap();
        cassette.put(&prompt_hash(&prompt.text), run.parse().unwrap(), text);
    }
    cassette
}

pub struct ReplayRun {
    pub archive: PathBuf,
    pub summary: serde_json::Value,
}

pub fn replay_run(out: &Path) -> ReplayRun {
    let output = refbench()
        .args(["run", "--config"])
        .arg(e2e_dir().join("manifest.json"))
        .args(["--cassette", "replay", "--run-id", "replay"])
        .arg("--out")
        .arg(out)
        .output()
        .unwrap();
    assert!(output.status.success(), "run failed: {}", String::from_utf8_lossy(&output.stderr));
    let summary: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    ReplayRun { archive: out.join("replay"), summary }
}

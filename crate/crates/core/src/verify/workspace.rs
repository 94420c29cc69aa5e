//! Git checkouts at a baseline revision and one branch per patched variant.

use std::path::{Component, Path, PathBuf};
use std::process::Command;

use serde::{Deserialize, Serialize};

use super::HarnessError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Workspace {
    pub repository: String,
    pub path: PathBuf,
    /// Full commit id of the checked-out baseline.
    pub baseline_revision: String,
    pub branch_prefix: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatchedFile {
    /// Path relative to the workspace root.
    pub path: PathBuf,
    pub contents: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariantLabel {
    pub scenario: String,
    pub strategy: String,
    pub run: u32,
}

fn branch_component(s: &str) -> String {
    let cleaned: String = s.chars().map(|c| if c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.') { c } else { '-' }).collect();
    let trimmed = cleaned.trim_matches(|c| c == '.' || c == '-');
    if trimmed.is_empty() {
        "_".to_owned()
    } else {
        trimmed.replace("..", ".")
    }
}

impl VariantLabel {
    pub fn branch(&self, prefix: &str) -> String {
        format!("{}/{}/{}/{}", branch_component(prefix), branch_component(&self.scenario), branch_component(&self.strategy), self.run)
    }
}

pub(crate) fn git(dir: &Path, args: &[&str]) -> Result<String, HarnessError> {
    let out = Command::new("git")
        .arg("-C")
        .arg(dir)
        .args(["-c", "user.name=refbench", "-c", "user.email=refbench@localhost", "-c", "commit.gpgsign=false"])
        .args(args)
        .output()
        .map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => HarnessError::Environment("'git' not found".into()),
            _ => HarnessError::Io(e.to_string()),
        })?;
    if !out.status.success() {
        return Err(HarnessError::Workspace(format!("git {} failed: {}", args.join(" "), String::from_utf8_lossy(&out.stderr).trim())));
    }
    Ok(String::from_utf8_lossy(&out.stdout).trim_end().to_owned())
}

/// Make `path` a git clone of `repository`. An existing clone is reused; a
/// local directory that is not a git repository is snapshotted.
pub fn ensure_clone(repository: &str, path: &Path) -> Result<(), HarnessError> {
    if path.join(".git").exists() {
        return Ok(());
    }
    let local = Path::new(repository);
    if local.is_dir() && !local.join(".git").exists() {
        snapshot_directory(local, path)?;
        return Ok(());
    }
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent).map_err(|e| HarnessError::Io(e.to_string()))?;
    }
    let out = Command::new("git")
        .args(["clone", "--quiet", repository])
        .arg(path)
        .output()
        .map_err(|e| HarnessError::Environment(format!("git: {e}")))?;
    if !out.status.success() {
        return Err(HarnessError::Workspace(format!("cloning {repository}: {}", String::from_utf8_lossy(&out.stderr).trim())));
    }
    Ok(())
}

/// Contents of `file` at `revision` in the clone at `path`.
pub fn read_at_revision(path: &Path, revision: &str, file: &str) -> Result<String, HarnessError> {
    let file = file.trim_start_matches("./");
    git(path, &["rev-parse", "--verify", "--quiet", &format!("{revision}^{{commit}}")])
        .map_err(|_| HarnessError::Workspace(format!("unknown revision '{revision}' in {}", path.display())))?;
    let out = Command::new("git")
        .arg("-C")
        .arg(path)
        .args(["show", &format!("{revision}:{file}")])
        .output()
        .map_err(|e| HarnessError::Environment(format!("git: {e}")))?;
    if !out.status.success() {
        return Err(HarnessError::Workspace(format!("{file} not found at {revision}")));
    }
    String::from_utf8(out.stdout).map_err(|_| HarnessError::Workspace(format!("{file} at {revision} is not UTF-8")))
}

/// Clone `repository` into `path` (or reuse an existing clone) and check out `revision` cleanly.
pub fn checkout(repository: &str, path: &Path, revision: &str, branch_prefix: &str) -> Result<Workspace, HarnessError> {
    ensure_clone(repository, path)?;
    let commit = git(path, &["rev-parse", "--verify", "--quiet", &format!("{revision}^{{commit}}")])
        .map_err(|_| HarnessError::Workspace(format!("unknown revision '{revision}' in {repository}")))?;
    git(path, &["checkout", "--quiet", "--force", "--detach", &commit])?;
    git(path, &["clean", "-fdxq"])?;
    Ok(Workspace {
        repository: repository.to_owned(),
        path: path.to_owned(),
        baseline_revision: commit,
        branch_prefix: branch_prefix.to_owned(),
    })
}

fn copy_tree(src: &Path, dest: &Path) -> std::io::Result<()> {
    std::fs::create_dir_all(dest)?;
    for entry in std::fs::read_dir(src)? {
        let entry = entry?;
        let to = dest.join(entry.file_name());
        if entry.file_type()?.is_dir() {
            if entry.file_name() != ".git" {
                copy_tree(&entry.path(), &to)?;
            }
        } else {
            std::fs::copy(entry.path(), to)?;
        }
    }
    Ok(())
}

/// Copy a plain project directory to `dest` as a one-commit repository; returns the commit id.
pub fn snapshot_directory(src: &Path, dest: &Path) -> Result<String, HarnessError> {
    copy_tree(src, dest).map_err(|e| HarnessError::Io(format!("copying {}: {e}", src.display())))?;
    git(dest, &["init", "--quiet"])?;
    git(dest, &["add", "--all"])?;
    let out = Command::new("git")
        .arg("-C")
        .arg(dest)
        .args(["-c", "user.name=refbench", "-c", "user.email=refbench@localhost", "-c", "commit.gpgsign=false"])
        .args(["commit", "--quiet", "-m", "baseline"])
        .env("GIT_AUTHOR_DATE", "2000-01-01T00:00:00Z")
        .env("GIT_COMMITTER_DATE", "2000-01-01T00:00:00Z")
        .output()
        .map_err(|e| HarnessError::Environment(format!("git: {e}")))?;
    if !out.status.success() {
        return Err(HarnessError::Workspace(format!("snapshot commit: {}", String::from_utf8_lossy(&out.stderr).trim())));
    }
    git(dest, &["rev-parse", "HEAD"])
}

impl Workspace {
    pub fn is_dirty(&self) -> Result<bool, HarnessError> {
        Ok(!git(&self.path, &["status", "--porcelain"])?.is_empty())
    }

    /// Tree id of the baseline commit; unchanged by any variant work.
    pub fn baseline_tree(&self) -> Result<String, HarnessError> {
        git(&self.path, &["rev-parse", &format!("{}^{{tree}}", self.baseline_revision)])
    }

    pub fn checkout_branch(&self, branch: &str) -> Result<(), HarnessError> {
        git(&self.path, &["checkout", "--quiet", "--force", branch])?;
        git(&self.path, &["clean", "-fdxq"])?;
        Ok(())
    }

    pub fn checkout_baseline(&self) -> Result<(), HarnessError> {
        self.checkout_branch(&self.baseline_revision)
    }

    /// Commit `files` on top of the baseline to `<prefix>/<scenario>/<strategy>/<run>`.
    /// An existing branch of that name is reset.
    pub fn commit_variant(&self, files: &[PatchedFile], label: &VariantLabel) -> Result<String, HarnessError> {
        if files.is_empty() {
            return Err(HarnessError::State("no patched files to commit".into()));
        }
        for f in files {
            if f.path.is_absolute() || f.path.components().any(|c| matches!(c, Component::ParentDir)) {
                return Err(HarnessError::State(format!("patched path {} escapes the workspace", f.path.display())));
            }
        }
        if self.is_dirty()? {
            return Err(HarnessError::State(format!("workspace {} has uncommitted changes", self.path.display())));
        }
        let branch = label.branch(&self.branch_prefix);
        if git(&self.path, &["rev-parse", "--verify", "--quiet", &format!("refs/heads/{branch}")]).is_ok() {
            log::info!("resetting existing branch {branch}");
        }
        git(&self.path, &["checkout", "--quiet", "--force", "-B", &branch, &self.baseline_revision])?;
        for f in files {
            let target = self.path.join(&f.path);
            if let Some(parent) = target.parent() {
                std::fs::create_dir_all(parent).map_err(|e| HarnessError::Io(e.to_string()))?;
            }
            std::fs::write(&target, &f.contents).map_err(|e| HarnessError::Io(format!("{}: {e}", target.display())))?;
            git(&self.path, &["add", "--", &f.path.to_string_lossy()])?;
        }
        let message = format!("{} {} run {}", label.scenario, label.strategy, label.run);
        git(&self.path, &["commit", "--quiet", "--allow-empty", "-m", &message])?;
        Ok(branch)
    }
}

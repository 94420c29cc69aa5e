//! Subprocess execution with a wall-clock limit.

use std::io::{Read, Seek, SeekFrom};
use std::path::Path;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use wait_timeout::ChildExt;

use super::HarnessError;

/// Shell exit status for "command not found".
const NOT_FOUND_STATUS: i32 = 127;

#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub status: Option<i32>,
    /// Interleaved stdout and stderr.
    pub output: String,
    pub elapsed: Duration,
}

impl CommandOutput {
    pub fn success(&self) -> bool {
        self.status == Some(0)
    }
}

pub fn run(argv: &[String], cwd: &Path, timeout: Duration) -> Result<CommandOutput, HarnessError> {
    let (program, args) = argv.split_first().ok_or_else(|| HarnessError::Config("empty command".into()))?;
    let mut sink = tempfile::tempfile().map_err(|e| HarnessError::Io(format!("temp file: {e}")))?;
    let err_sink = sink.try_clone().map_err(|e| HarnessError::Io(e.to_string()))?;
    let started = Instant::now();
    let mut child = Command::new(program)
        .args(args)
        .current_dir(cwd)
        .stdin(Stdio::null())
        .stdout(Stdio::from(sink.try_clone().map_err(|e| HarnessError::Io(e.to_string()))?))
        .stderr(Stdio::from(err_sink))
        .spawn()
        .map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => HarnessError::Environment(format!("'{program}' not found")),
            _ => HarnessError::Io(format!("spawning '{program}': {e}")),
        })?;
    let status = match child.wait_timeout(timeout).map_err(|e| HarnessError::Io(e.to_string()))? {
        Some(status) => status,
        None => {
            let _ = child.kill();
            let _ = child.wait();
            return Err(HarnessError::Timeout { command: argv.join(" "), after: timeout });
        }
    };
    let mut output = String::new();
    sink.seek(SeekFrom::Start(0)).map_err(|e| HarnessError::Io(e.to_string()))?;
    let mut bytes = Vec::new();
    sink.read_to_end(&mut bytes).map_err(|e| HarnessError::Io(e.to_string()))?;
    output.push_str(&String::from_utf8_lossy(&bytes));
    if status.code() == Some(NOT_FOUND_STATUS) {
        let last = output.lines().last().unwrap_or("").trim().to_owned();
        return Err(HarnessError::Environment(format!("'{}' exited 127: {last}", argv.join(" "))));
    }
    Ok(CommandOutput { status: status.code(), output, elapsed: started.elapsed() })
}

//! Test result parsing behind a report-format adapter registry.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::Arc;

use quick_xml::events::Event;
use quick_xml::Reader;
use serde::{Deserialize, Serialize};

use super::HarnessError;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestReport {
    pub failed: BTreeSet<String>,
    pub errored: BTreeSet<String>,
    pub executed: usize,
}

impl TestReport {
    /// Record one test result. A test both failing and erroring counts as errored.
    pub fn record(&mut self, id: String, status: TestStatus) {
        self.executed += 1;
        match status {
            TestStatus::Passed | TestStatus::Skipped => {}
            TestStatus::Failed => {
                if !self.errored.contains(&id) {
                    self.failed.insert(id);
                }
            }
            TestStatus::Errored => {
                self.failed.remove(&id);
                self.errored.insert(id);
            }
        }
    }

    /// Status of every test that did not pass.
    pub fn statuses(&self) -> BTreeMap<&str, TestStatus> {
        self.failed
            .iter()
            .map(|t| (t.as_str(), TestStatus::Failed))
            .chain(self.errored.iter().map(|t| (t.as_str(), TestStatus::Errored)))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TestStatus {
    Passed,
    Failed,
    Errored,
    Skipped,
}

/// Turns a test run's console output and working tree into a [`TestReport`].
pub trait ReportAdapter: Send + Sync {
    fn id(&self) -> &'static str;

    /// `report_path` is the configured report location, relative to `workdir`.
    fn parse(&self, output: &str, workdir: &Path, report_path: Option<&str>) -> Result<TestReport, HarnessError>;
}

/// Surefire-style `TEST-*.xml` files (any `*.xml` under the report directory).
pub struct JunitXml;

impl JunitXml {
    fn parse_xml(xml: &str, report: &mut TestReport) -> Result<(), String> {
        let mut reader = Reader::from_str(xml);
        let mut current: Option<(String, TestStatus)> = None;
        loop {
            match reader.read_event().map_err(|e| e.to_string())? {
                Event::Start(e) if e.name().as_ref() == b"testcase" => current = Some((Self::case_id(&e)?, TestStatus::Passed)),
                Event::Empty(e) if e.name().as_ref() == b"testcase" => report.record(Self::case_id(&e)?, TestStatus::Passed),
                Event::Start(e) | Event::Empty(e) => {
                    if let Some((_, status)) = current.as_mut() {
                        match e.name().as_ref() {
                            b"failure" if *status == TestStatus::Passed => *status = TestStatus::Failed,
                            b"error" => *status = TestStatus::Errored,
                            b"skipped" if *status == TestStatus::Passed => *status = TestStatus::Skipped,
                            _ => {}
                        }
                    }
                }
                Event::End(e) if e.name().as_ref() == b"testcase" => {
                    if let Some((id, status)) = current.take() {
                        report.record(id, status);
                    }
                }
                Event::Eof => return Ok(()),
                _ => {}
            }
        }
    }

    fn case_id(e: &quick_xml::events::BytesStart<'_>) -> Result<String, String> {
        let mut class = String::new();
        let mut name = String::new();
        for attr in e.attributes() {
            let attr = attr.map_err(|e| e.to_string())?;
            let value = attr.unescape_value().map_err(|e| e.to_string())?.into_owned();
            match attr.key.as_ref() {
                b"classname" => class = value,
                b"name" => name = value,
                _ => {}
            }
        }
        Ok(if class.is_empty() { name } else { format!("{class}#{name}") })
    }
}

impl ReportAdapter for JunitXml {
    fn id(&self) -> &'static str {
        "junit-xml"
    }

    fn parse(&self, _output: &str, workdir: &Path, report_path: Option<&str>) -> Result<TestReport, HarnessError> {
        let dir = workdir.join(report_path.unwrap_or("target/surefire-reports"));
        let mut files: Vec<_> = std::fs::read_dir(&dir)
            .map_err(|e| HarnessError::Runner(format!("no test reports at {}: {e}", dir.display())))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "xml"))
            .collect();
        files.sort();
        let mut report = TestReport::default();
        for f in files {
            let xml = std::fs::read_to_string(&f).map_err(|e| HarnessError::Io(format!("{}: {e}", f.display())))?;
            Self::parse_xml(&xml, &mut report).map_err(|e| HarnessError::Runner(format!("{}: {e}", f.display())))?;
        }
        Ok(report)
    }
}

/// One result per console line: `PASS|FAIL|ERROR|SKIP <test-id>`. Other lines are ignored.
pub struct SummaryLines;

impl ReportAdapter for SummaryLines {
    fn id(&self) -> &'static str {
        "summary-lines"
    }

    fn parse(&self, output: &str, _workdir: &Path, _report_path: Option<&str>) -> Result<TestReport, HarnessError> {
        let mut report = TestReport::default();
        for line in output.lines() {
            let Some((tag, id)) = line.trim().split_once(char::is_whitespace) else { continue };
            let status = match tag.trim_end_matches(':').to_ascii_uppercase().as_str() {
                "PASS" | "PASSED" | "OK" => TestStatus::Passed,
                "FAIL" | "FAILED" => TestStatus::Failed,
                "ERROR" | "ERRORED" => TestStatus::Errored,
                "SKIP" | "SKIPPED" => TestStatus::Skipped,
                _ => continue,
            };
            let id = id.trim();
            if !id.is_empty() {
                report.record(id.to_owned(), status);
            }
        }
        Ok(report)
    }
}

#[derive(Clone)]
pub struct ReportAdapters {
    adapters: BTreeMap<&'static str, Arc<dyn ReportAdapter>>,
}

impl Default for ReportAdapters {
    fn default() -> Self {
        let mut r = Self { adapters: BTreeMap::new() };
        r.register(Arc::new(JunitXml));
        r.register(Arc::new(SummaryLines));
        r
    }
}

impl ReportAdapters {
    pub fn register(&mut self, adapter: Arc<dyn ReportAdapter>) {
        self.adapters.insert(adapter.id(), adapter);
    }

    pub fn get(&self, id: &str) -> Result<Arc<dyn ReportAdapter>, HarnessError> {
        self.adapters.get(id).cloned().ok_or_else(|| {
            HarnessError::Config(format!(
                "unknown report adapter '{id}' (known: {})",
                self.adapters.keys().copied().collect::<Vec<_>>().join(", ")
            ))
        })
    }
}

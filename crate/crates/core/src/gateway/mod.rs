//! Model access: provider adapters, retries, rate limiting and cassettes.

pub mod cassette;
pub mod providers;

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use reqwest::blocking::Client;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::corpus::{Catalog, RefactoringScenario};
use crate::prompt::{PromptError, PromptForge, RenderedPrompt, StrategyKind};

pub use cassette::{prompt_hash, Cassette, CassetteError, CassetteMode};
pub use providers::{ChatProvider, ProviderError, ProviderRegistry, ProviderReply};

fn default_timeout() -> f64 {
    120.0
}

fn default_retries() -> u32 {
    3
}

fn default_backoff_ms() -> u64 {
    500
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelConfig {
    /// Name used in manifests, archives and reports.
    pub id: String,
    pub provider: String,
    pub model_name: String,
    pub api_base: String,
    /// Environment variable holding the API key; `None` sends no credential.
    #[serde(default)]
    pub credential_env: Option<String>,
    /// Provider request fields; empty means provider defaults.
    #[serde(default)]
    pub sampling: BTreeMap<String, Value>,
    #[serde(default = "default_timeout")]
    pub timeout_secs: f64,
    #[serde(default = "default_retries")]
    pub max_retries: u32,
    #[serde(default = "default_backoff_ms")]
    pub backoff_ms: u64,
    #[serde(default)]
    pub requests_per_minute: Option<u32>,
}

impl ModelConfig {
    pub fn validate(&self) -> Result<(), GatewayError> {
        if !(self.timeout_secs.is_finite() && self.timeout_secs > 0.0) {
            return Err(GatewayError::Config(format!("model '{}': timeout must be positive", self.id)));
        }
        if self.requests_per_minute == Some(0) {
            return Err(GatewayError::Config(format!("model '{}': requests_per_minute must be positive", self.id)));
        }
        Ok(())
    }

    pub fn timeout(&self) -> Duration {
        Duration::from_secs_f64(self.timeout_secs)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompletionRecord {
    pub scenario_id: String,
    pub strategy: StrategyKind,
    pub model: String,
    pub run_index: u32,
    pub prompt_hash: String,
    pub raw_text: String,
    pub latency_ms: u64,
    #[serde(default)]
    pub provider_meta: Value,
    /// Set when no response was obtained.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CompletionRecord {
    pub fn is_ok(&self) -> bool {
        self.error.is_none()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum GatewayError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("unknown provider '{0}'")]
    UnknownProvider(String),
    #[error("credential variable {0} is not set")]
    MissingCredential(String),
    #[error("no recorded response for prompt {hash} run {run_index}")]
    CassetteMiss { hash: String, run_index: u32 },
    #[error("provider failed after {attempts} attempt(s): {source}")]
    Provider { attempts: u32, source: ProviderError },
    #[error(transparent)]
    Cassette(#[from] CassetteError),
    #[error(transparent)]
    Prompt(#[from] PromptError),
}

/// Spaces requests at a fixed minimum interval.
struct RateLimiter {
    interval: Duration,
    next: Mutex<Option<Instant>>,
}

impl RateLimiter {
    fn acquire(&self) {
        let wait = {
            let mut next = self.next.lock().expect("rate limiter lock");
            let now = Instant::now();
            let slot = next.map_or(now, |n| n.max(now));
            *next = Some(slot + self.interval);
            slot - now
        };
        if !wait.is_zero() {
            std::thread::sleep(wait);
        }
    }
}

/// Issues prompts through providers or a cassette. Safe to share across threads.
pub struct Gateway {
    providers: ProviderRegistry,
    mode: CassetteMode,
    cassette: Mutex<Cassette>,
    cassette_path: Option<PathBuf>,
    http: Client,
    network_calls: AtomicU64,
    limiters: Mutex<HashMap<String, Arc<RateLimiter>>>,
}

impl Gateway {
    pub fn new(providers: ProviderRegistry, mode: CassetteMode, cassette: Cassette, cassette_path: Option<PathBuf>) -> Self {
        Self {
            providers,
            mode,
            cassette: Mutex::new(cassette),
            cassette_path,
            http: Client::new(),
            network_calls: AtomicU64::new(0),
            limiters: Mutex::new(HashMap::new()),
        }
    }

    /// Gateway backed by the cassette file at `path` (created on first record).
    pub fn with_cassette_file(providers: ProviderRegistry, mode: CassetteMode, path: &Path) -> Result<Self, GatewayError> {
        let cassette = Cassette::load(path)?;
        if mode == CassetteMode::Replay && cassette.is_empty() {
            log::warn!("replay cassette {} is empty or missing", path.display());
        }
        Ok(Self::new(providers, mode, cassette, Some(path.to_owned())))
    }

    pub fn mode(&self) -> CassetteMode {
        self.mode
    }

    /// HTTP attempts made so far, including retried ones.
    pub fn network_calls(&self) -> u64 {
        self.network_calls.load(Ordering::SeqCst)
    }

    pub fn cassette(&self) -> Cassette {
        self.cassette.lock().expect("cassette lock").clone()
    }

    pub fn complete(&self, prompt: &RenderedPrompt, config: &ModelConfig, run_index: u32) -> Result<CompletionRecord, GatewayError> {
        let hash = prompt_hash(&prompt.text);
        let record = |raw_text: String, latency_ms: u64, provider_meta: Value| CompletionRecord {
            scenario_id: prompt.scenario_id.clone(),
            strategy: prompt.strategy,
            model: config.id.clone(),
            run_index,
            prompt_hash: hash.clone(),
            raw_text,
            latency_ms,
            provider_meta,
            error: None,
        };
        if self.mode == CassetteMode::Replay {
            let cassette = self.cassette.lock().expect("cassette lock");
            let text = cassette.get(&hash, run_index).ok_or_else(|| GatewayError::CassetteMiss { hash: hash.clone(), run_index })?;
            return Ok(record(text.to_owned(), 0, Value::Null));
        }

        config.validate()?;
        let provider = self.providers.get(&config.provider).ok_or_else(|| GatewayError::UnknownProvider(config.provider.clone()))?;
        let credential = match &config.credential_env {
            Some(var) => Some(std::env::var(var).map_err(|_| GatewayError::MissingCredential(var.clone()))?),
            None => None,
        };
        let started = Instant::now();
        let reply = self.call_with_retries(provider.as_ref(), config, credential.as_deref(), &prompt.text)?;
        let latency_ms = u64::try_from(started.elapsed().as_millis()).unwrap_or(u64::MAX);

        if self.mode == CassetteMode::Record {
            let mut cassette = self.cassette.lock().expect("cassette lock");
            cassette.put(&hash, run_index, &reply.text);
            if let Some(path) = &self.cassette_path {
                cassette.save(path)?;
            }
        }
        Ok(record(reply.text, latency_ms, reply.meta))
    }

    fn limiter(&self, config: &ModelConfig) -> Option<Arc<RateLimiter>> {
        let rpm = config.requests_per_minute?;
        let key = format!("{}|{}", config.provider, config.api_base);
        let mut map = self.limiters.lock().expect("limiter lock");
        Some(
            map.entry(key)
                .or_insert_with(|| Arc::new(RateLimiter { interval: Duration::from_secs(60) / rpm, next: Mutex::new(None) }))
                .clone(),
        )
    }

    fn call_with_retries(
        &self,
        provider: &dyn ChatProvider,
        config: &ModelConfig,
        credential: Option<&str>,
        prompt: &str,
    ) -> Result<ProviderReply, GatewayError> {
        let limiter = self.limiter(config);
        let mut attempt = 0;
        loop {
            attempt += 1;
            if let Some(l) = &limiter {
                l.acquire();
            }
            self.network_calls.fetch_add(1, Ordering::SeqCst);
            match provider.complete(&self.http, config, credential, prompt) {
                Ok(reply) => return Ok(reply),
                Err(e) if e.is_retryable() && attempt <= config.max_retries => {
                    let backoff = Duration::from_millis(config.backoff_ms.saturating_mul(1 << (attempt - 1).min(16)));
                    let wait = match &e {
                        ProviderError::RateLimited { retry_after: Some(d) } => (*d).max(backoff),
                        _ => backoff,
                    };
                    log::warn!("{} attempt {attempt} failed ({e}); retrying in {wait:?}", config.id);
                    std::thread::sleep(wait);
                }
                Err(source) => return Err(GatewayError::Provider { attempts: attempt, source }),
            }
        }
    }

    /// `runs` completions of one rendered strategy; failed runs are kept as
    /// records with `error` set.
    pub fn run_batch(
        &self,
        forge: &PromptForge,
        catalog: &Catalog,
        scenario: &RefactoringScenario,
        strategy: StrategyKind,
        config: &ModelConfig,
        runs: u32,
    ) -> Result<Vec<CompletionRecord>, GatewayError> {
        let entry = catalog.lookup(&scenario.refactoring_type).map_err(PromptError::from)?;
        let prompt = forge.render(strategy, scenario, entry)?;
        if runs == 0 {
            log::warn!("run_batch for '{}' / {strategy} requested zero runs", scenario.id);
        }
        Ok((1..=runs).map(|run| self.complete_or_record_failure(&prompt, config, run)).collect())
    }

    pub fn complete_or_record_failure(&self, prompt: &RenderedPrompt, config: &ModelConfig, run_index: u32) -> CompletionRecord {
        self.complete(prompt, config, run_index).unwrap_or_else(|e| CompletionRecord {
            scenario_id: prompt.scenario_id.clone(),
            strategy: prompt.strategy,
            model: config.id.clone(),
            run_index,
            prompt_hash: prompt_hash(&prompt.text),
            raw_text: String::new(),
            latency_ms: 0,
            provider_meta: Value::Null,
            error: Some(e.to_string()),
        })
    }
}

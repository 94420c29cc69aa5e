//! HTTP chat-completion adapters, selected by provider id.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Duration;

use reqwest::blocking::Client;
use reqwest::StatusCode;
use serde_json::{json, Map, Value};

use super::ModelConfig;

#[derive(Debug, Clone, PartialEq)]
pub struct ProviderReply {
    pub text: String,
    pub meta: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProviderError {
    #[error("transport failure: {0}")]
    Transport(String),
    #[error("rate limited (HTTP 429)")]
    RateLimited { retry_after: Option<Duration> },
    #[error("HTTP {status}: {body}")]
    Http { status: u16, body: String },
    #[error("unexpected response shape: {0}")]
    Malformed(String),
}

impl ProviderError {
    pub fn is_retryable(&self) -> bool {
        matches!(self, Self::Transport(_) | Self::RateLimited { .. })
    }
}

pub trait ChatProvider: Send + Sync {
    fn id(&self) -> &'static str;

    fn complete(&self, http: &Client, config: &ModelConfig, credential: Option<&str>, prompt: &str)
        -> Result<ProviderReply, ProviderError>;
}

fn post_json(http: &Client, url: &str, bearer: Option<&str>, body: &Value, timeout: Duration) -> Result<Value, ProviderError> {
    let mut req = http.post(url).timeout(timeout).json(body);
    if let Some(token) = bearer {
        req = req.bearer_auth(token);
    }
    let resp = req.send().map_err(|e| ProviderError::Transport(e.to_string()))?;
    let status = resp.status();
    if status == StatusCode::TOO_MANY_REQUESTS {
        let retry_after = resp
            .headers()
            .get(reqwest::header::RETRY_AFTER)
            .and_then(|v| v.to_str().ok())
            .and_then(|v| v.trim().parse::<u64>().ok())
            .map(Duration::from_secs);
        return Err(ProviderError::RateLimited { retry_after });
    }
    let text = resp.text().map_err(|e| ProviderError::Transport(e.to_string()))?;
    if !status.is_success() {
        return Err(ProviderError::Http { status: status.as_u16(), body: text });
    }
    serde_json::from_str(&text).map_err(|e| ProviderError::Malformed(e.to_string()))
}

fn with_sampling(mut body: Map<String, Value>, sampling: &BTreeMap<String, Value>) -> Value {
    for (k, v) in sampling {
        body.insert(k.clone(), v.clone());
    }
    Value::Object(body)
}

fn endpoint(base: &str, path: &str) -> String {
    format!("{}/{}", base.trim_end_matches('/'), path)
}

/// `POST {api_base}/chat/completions`, as served by OpenAI, DeepSeek and
/// most hosted gateways.
pub struct OpenAiCompatible;

impl ChatProvider for OpenAiCompatible {
    fn id(&self) -> &'static str {
        "openai-compatible"
    }

    fn complete(
        &self,
        http: &Client,
        config: &ModelConfig,
        credential: Option<&str>,
        prompt: &str,
    ) -> Result<ProviderReply, ProviderError> {
        let mut body = Map::new();
        body.insert("model".into(), json!(config.model_name));
        body.insert("messages".into(), json!([{ "role": "user", "content": prompt }]));
        let resp = post_json(
            http,
            &endpoint(&config.api_base, "chat/completions"),
            credential,
            &with_sampling(body, &config.sampling),
            config.timeout(),
        )?;
        let text = resp
            .pointer("/choices/0/message/content")
            .and_then(Value::as_str)
            .ok_or_else(|| ProviderError::Malformed("missing choices[0].message.content".into()))?
            .to_owned();
        let meta = json!({
            "id": resp.get("id"),
            "model": resp.get("model"),
            "finish_reason": resp.pointer("/choices/0/finish_reason"),
            "usage": resp.get("usage"),
        });
        Ok(ProviderReply { text, meta })
    }
}

/// `POST {api_base}/api/chat` on a local Ollama server.
pub struct Ollama;

impl ChatProvider for Ollama {
    fn id(&self) -> &'static str {
        "ollama"
    }

    fn complete(
        &self,
        http: &Client,
        config: &ModelConfig,
        credential: Option<&str>,
        prompt: &str,
    ) -> Result<ProviderReply, ProviderError> {
        let mut body = Map::new();
        body.insert("model".into(), json!(config.model_name));
        body.insert("messages".into(), json!([{ "role": "user", "content": prompt }]));
        body.insert("stream".into(), json!(false));
        if !config.sampling.is_empty() {
            body.insert("options".into(), json!(config.sampling));
        }
        let resp = post_json(http, &endpoint(&config.api_base, "api/chat"), credential, &Value::Object(body), config.timeout())?;
        let text = resp
            .pointer("/message/content")
            .and_then(Value::as_str)
            .ok_or_else(|| ProviderError::Malformed("missing message.content".into()))?
            .to_owned();
        let meta = json!({ "model": resp.get("model"), "done_reason": resp.get("done_reason") });
        Ok(ProviderReply { text, meta })
    }
}

#[derive(Clone, Default)]
pub struct ProviderRegistry {
    providers: BTreeMap<&'static str, Arc<dyn ChatProvider>>,
}

impl ProviderRegistry {
    pub fn with_builtin() -> Self {
        let mut r = Self::default();
        r.register(Arc::new(OpenAiCompatible));
        r.register(Arc::new(Ollama));
        r
    }

    pub fn register(&mut self, provider: Arc<dyn ChatProvider>) {
        self.providers.insert(provider.id(), provider);
    }

    pub fn get(&self, id: &str) -> Option<Arc<dyn ChatProvider>> {
        self.providers.get(id).cloned()
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.providers.keys().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn retry_classes() {
        assert!(ProviderError::Transport("reset".into()).is_retryable());
        assert!(ProviderError::RateLimited { retry_after: None }.is_retryable());
        assert!(!ProviderError::Http { status: 401, body: String::new() }.is_retryable());
        assert!(!ProviderError::Http { status: 500, body: String::new() }.is_retryable());
        assert!(!ProviderError::Malformed("x".into()).is_retryable());
    }

    #[test]
    fn builtin_registry() {
        let r = ProviderRegistry::with_builtin();
        assert_eq!(r.ids(), ["ollama", "openai-compatible"]);
        assert!(r.get("nope").is_none());
    }

    #[test]
    fn endpoint_joins_cleanly() {
        assert_eq!(endpoint("http://h/v1/", "chat/completions"), "http://h/v1/chat/completions");
        assert_eq!(endpoint("http://h/v1", "chat/completions"), "http://h/v1/chat/completions");
    }
}

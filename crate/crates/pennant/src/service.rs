//! Read-only HTTP service over a prebuilt index.
//!
//! Endpoints (all GET):
//!
//! * `/healthz` returns `ok`.
//! * `/terms?prefix=&limit=` lists terms with their document frequencies.
//! * `/pennant?seed=&min_co=&top_k=&base=&alpha=&gamma=&tau=&n=` returns the
//!   diagram as JSON; `/pennant.svg` takes the same query and returns SVG.
//!
//! Omitted parameters fall back to the configured defaults. Every response
//! is a pure function of the index and the query string.

#![allow(clippy::result_large_err)]

use std::collections::HashMap;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use axum::extract::{Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::get;
use axum::Router;
use pennant_core::render::{to_json, to_svg, to_terms_json, RenderStyle};
use pennant_core::{compute_pennant, LogBase, PennantOptions, SectorParams, TermIndex};
use tower_http::cors::CorsLayer;

use crate::store::read_index_file;
use crate::Result;

pub const DEFAULT_LISTEN: &str = "127.0.0.1:8080";
pub const DEFAULT_TERMS_LIMIT: usize = 20;

const JSON: &str = "application/json";
const SVG: &str = "image/svg+xml";
const TEXT: &str = "text/plain; charset=utf-8";

#[derive(Debug, Clone)]
pub struct ServiceConfig {
    pub listen: SocketAddr,
    pub index_path: PathBuf,
    pub defaults: PennantOptions,
    /// Allow cross-origin requests, for a UI served from another origin.
    pub cors: bool,
}

pub struct AppState {
    pub index: TermIndex,
    pub defaults: PennantOptions,
}

/// Builds the router. CORS, when wanted, is layered on by [`serve`].
pub fn router(state: Arc<AppState>) -> Router {
    Router::new()
        .route("/healthz", get(healthz))
        .route("/terms", get(terms))
        .route("/pennant", get(pennant_json))
        .route("/pennant.svg", get(pennant_svg))
        .with_state(state)
}

/// Loads the index, then serves until interrupted. In-flight requests
/// complete before shutdown.
pub async fn serve(config: ServiceConfig) -> Result<()> {
    let index = read_index_file(&config.index_path)?;
    tracing::info!(
        path = %config.index_path.display(),
        n_docs = index.n_docs(),
        terms = index.vocab_len(),
        "index loaded"
    );
    let state = Arc::new(AppState {
        index,
        defaults: config.defaults,
    });
    let mut app = router(state);
    if config.cors {
        app = app.layer(CorsLayer::permissive());
    }
    let listener = tokio::net::TcpListener::bind(config.listen)
        .await
        .map_err(|e| crate::Error::io(config.listen.to_string(), e))?;
    tracing::info!(addr = %config.listen, "listening");
    axum::serve(listener, app)
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
            tracing::info!("shutting down");
        })
        .await
        .map_err(|e| crate::Error::io(config.listen.to_string(), e))
}

type Params = Query<HashMap<String, String>>;

async fn healthz() -> Response {
    respond(StatusCode::OK, TEXT, "ok".to_string())
}

async fn terms(State(state): State<Arc<AppState>>, Query(q): Params) -> Response {
    let limit = match opt_param::<usize>(&q, "limit") {
        Ok(v) => v.unwrap_or(DEFAULT_TERMS_LIMIT),
        Err(resp) => return resp,
    };
    let prefix = state
        .index
        .normalize(q.get("prefix").map(String::as_str).unwrap_or(""));
    let body = to_terms_json(state.index.terms_with_prefix(&prefix, limit));
    respond(StatusCode::OK, JSON, body)
}

async fn pennant_json(State(state): State<Arc<AppState>>, Query(q): Params) -> Response {
    match diagram_for(&state, &q) {
        Ok(d) => respond(StatusCode::OK, JSON, to_json(&d)),
        Err(resp) => resp,
    }
}

async fn pennant_svg(State(state): State<Arc<AppState>>, Query(q): Params) -> Response {
    let d = match diagram_for(&state, &q) {
        Ok(d) => d,
        Err(resp) => return resp,
    };
    match to_svg(&d, &RenderStyle::default()) {
        Ok(svg) => respond(StatusCode::OK, SVG, svg),
        Err(e) => error(StatusCode::INTERNAL_SERVER_ERROR, &e.to_string()),
    }
}

fn diagram_for(
    state: &AppState,
    q: &HashMap<String, String>,
) -> Result<pennant_core::PennantDiagram, Response> {
    let seed = q
        .get("seed")
        .filter(|s| !s.trim().is_empty())
        .ok_or_else(|| error(StatusCode::BAD_REQUEST, "missing parameter seed"))?;
    let d = state.defaults;
    let base = match q.get("base") {
        None => d.log_base,
        Some(raw) => parse_base(raw).map_err(|m| error(StatusCode::BAD_REQUEST, &m))?,
    };
    let opts = PennantOptions {
        min_co: opt_param(q, "min_co")?.unwrap_or(d.min_co),
        top_k: opt_param(q, "top_k")?.or(d.top_k),
        log_base: base,
        n_override: opt_param(q, "n")?.or(d.n_override),
        sectors: SectorParams {
            alpha: opt_param(q, "alpha")?.unwrap_or(d.sectors.alpha),
            gamma: opt_param(q, "gamma")?.unwrap_or(d.sectors.gamma),
            tau: opt_param(q, "tau")?.unwrap_or(d.sectors.tau),
        },
    };
    compute_pennant(&state.index, seed, &opts).map_err(|e| match e {
        pennant_core::Error::UnknownTerm(term) => {
            let body = serde_json::json!({ "error": "unknown term", "seed": term });
            respond(StatusCode::NOT_FOUND, JSON, format!("{body}\n"))
        }
        other => error(StatusCode::BAD_REQUEST, &other.to_string()),
    })
}

/// Accepts a number greater than 1, or `e`.
pub fn parse_base(raw: &str) -> std::result::Result<LogBase, String> {
    if raw == "e" {
        return Ok(LogBase::E);
    }
    let v: f64 = raw
        .parse()
        .map_err(|_| format!("invalid log base {raw:?}"))?;
    LogBase::new(v).map_err(|e| e.to_string())
}

fn opt_param<T: FromStr>(q: &HashMap<String, String>, name: &str) -> Result<Option<T>, Response> {
    match q.get(name) {
        None => Ok(None),
        Some(raw) => raw.trim().parse().map(Some).map_err(|_| {
            error(
                StatusCode::BAD_REQUEST,
                &format!("invalid value {raw:?} for parameter {name}"),
            )
        }),
    }
}

fn error(status: StatusCode, message: &str) -> Response {
    let body = serde_json::json!({ "error": message });
    respond(status, JSON, format!("{body}\n"))
}

fn respond(status: StatusCode, content_type: &'static str, body: String) -> Response {
    (status, [(header::CONTENT_TYPE, content_type)], body).into_response()
}

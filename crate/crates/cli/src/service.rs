//! Stateless JSON-over-HTTP service under `/v1`.

use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post, MethodRouter};
use axum::{Json, Router};
use serde_json::Value;

use crate::doc::ApiError;
use crate::limits::Limits;
use crate::ops;

type Op = fn(&Value, &Limits) -> Result<Value, ApiError>;

pub fn status(e: &ApiError) -> StatusCode {
    match e {
        ApiError::Invalid(_) => StatusCode::BAD_REQUEST,
        ApiError::Domain(_) => StatusCode::UNPROCESSABLE_ENTITY,
        ApiError::Io(_) => StatusCode::INTERNAL_SERVER_ERROR,
    }
}

/// Parses the body and runs `op` off the async workers.
async fn handle(limits: Arc<Limits>, body: Bytes, op: Op) -> Response {
    let result = tokio::task::spawn_blocking(move || {
        let v: Value = serde_json::from_slice(&body)
            .map_err(|e| ApiError::field("", format!("body is not valid JSON: {e}")))?;
        op(&v, &limits)
    })
    .await;
    match result {
        Ok(Ok(v)) => (StatusCode::OK, Json(v)).into_response(),
        Ok(Err(e)) => (status(&e), Json(e.to_json())).into_response(),
        Err(e) => {
            let err = ApiError::Io(format!("computation failed: {e}"));
            (StatusCode::INTERNAL_SERVER_ERROR, Json(err.to_json())).into_response()
        }
    }
}

fn endpoint(op: Op) -> MethodRouter<Arc<Limits>> {
    post(move |State(limits): State<Arc<Limits>>, body: Bytes| handle(limits, body, op))
}

pub fn router(limits: Limits) -> Router {
    Router::new()
        .route("/v1/health", get(|| async { "ok" }))
        .route("/v1/basis", endpoint(ops::basis))
        .route("/v1/eval", endpoint(ops::eval))
        .route("/v1/sample", endpoint(ops::sample))
        .route("/v1/elevate", endpoint(ops::elevate_op))
        .route("/v1/join", endpoint(ops::join))
        .route("/v1/surface", endpoint(ops::surface))
        .route("/v1/elevation-partitions", endpoint(ops::elevation_partitions))
        .with_state(Arc::new(limits))
}

/// Serves until interrupted.
pub async fn serve(bind: &str, limits: Limits) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(bind).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(limits))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}

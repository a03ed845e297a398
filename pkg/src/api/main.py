# FastAPI 应用入口
"""
GitFan REST API 服务

与命令行提供相同的计算: 问题校验、𝔞-面、动锥、GIT 扇与导出。
"""

from contextlib import asynccontextmanager

import uvicorn
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from src.config import get_settings
from src.ingestion import dataset_names
from src.utils import get_logger, setup_logging

from .routes import fan, problems

logger = get_logger(__name__)

VERSION = "0.1.0"


@asynccontextmanager
async def lifespan(app: FastAPI):
    """应用生命周期管理"""
    settings = get_settings()
    setup_logging(settings.log_level, settings.log_json)
    logger.info("Starting GitFan API...")
    yield
    logger.info("Shutting down GitFan API...")


# 创建 FastAPI 应用
app = FastAPI(
    title="GitFan API",
    description="带对称性的 GIT 扇计算 API",
    version=VERSION,
    docs_url="/docs",
    redoc_url="/redoc",
    lifespan=lifespan,
)

# 配置 CORS
settings = get_settings()
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.api.cors_origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# 注册路由
app.include_router(problems.router, prefix="/api/v1/problems", tags=["Problems"])
app.include_router(fan.router, prefix="/api/v1/fan", tags=["Fan"])


@app.get("/")
async def root():
    """API 根路由"""
    return {
        "name": "GitFan API",
        "version": VERSION,
        "description": "带对称性的 GIT 扇计算",
        "docs": "/docs",
    }


@app.get("/health")
async def health_check():
    """健康检查"""
    return {"status": "healthy", "datasets": dataset_names()}


def run():
    """启动 API 服务"""
    settings = get_settings()
    uvicorn.run(
        "src.api.main:app",
        host=settings.api.host,
        port=settings.api.port,
        reload=settings.api.debug,
    )


if __name__ == "__main__":
    run()

"""Client-side plumbing: how the CLI reaches the service.

Without ``--server`` the CLI mounts the FastAPI app in-process and drives it
through a synchronous ASGI transport, so every command exercises the same
HTTP surface a remote client would see, network or not.
"""

from __future__ import annotations

import asyncio

import httpx


class InProcessTransport(httpx.BaseTransport):
    """Run sync httpx requests directly against an ASGI app."""

    def __init__(self, app):
        self._app = app

    def handle_request(self, request: httpx.Request) -> httpx.Response:
        async_request = httpx.Request(
            request.method,
            request.url,
            headers=request.headers,
            content=request.read(),
        )
        return asyncio.run(self._dispatch(async_request))

    async def _dispatch(self, request: httpx.Request) -> httpx.Response:
        transport = httpx.ASGITransport(app=self._app)
        response = await transport.handle_async_request(request)
        content = b"".join([chunk async for chunk in response.stream])
        return httpx.Response(
            status_code=response.status_code,
            headers=response.headers,
            content=content,
        )


def make_session(server: str | None) -> httpx.Client:
    """An HTTP session: remote when a URL is given, in-process otherwise."""
    if server:
        return httpx.Client(base_url=server.rstrip("/"), timeout=600.0)
    from .service.app import create_app

    return httpx.Client(
        transport=InProcessTransport(create_app()),
        base_url="http://satorder.local",
        timeout=None,
    )

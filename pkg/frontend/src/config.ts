/** API base URL: ?api=... query param, a global set by the host page,
 * or same-origin as a last resort. */

declare global {
  interface Window {
    CONCIERGE_API?: string
  }
}

export function apiBase(): string {
  const fromQuery = new URLSearchParams(window.location.search).get('api')
  if (fromQuery) return fromQuery.replace(/\/$/, '')
  if (window.CONCIERGE_API) return window.CONCIERGE_API.replace(/\/$/, '')
  return ''
}

import type {
  Descriptors,
  MethodRecord,
  RuleRecord,
  SelectionResponse,
  StatsRow,
} from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

export interface ClientOptions {
  baseUrl?: string;
  fetchFn?: typeof fetch;
}

/** Thin typed client; all selection logic stays on the server. */
export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchFn: typeof fetch;

  constructor(options: ClientOptions = {}) {
    this.baseUrl = (options.baseUrl ?? '').replace(/\/$/, '');
    this.fetchFn = options.fetchFn ?? fetch.bind(globalThis);
  }

  private async request<R>(path: string, init?: RequestInit): Promise<R> {
    const resp = await this.fetchFn(`${this.baseUrl}${path}`, init);
    if (!resp.ok) {
      let detail = `HTTP ${resp.status}`;
      try {
        const body = (await resp.json()) as { detail?: unknown };
        if (typeof body.detail === 'string') detail = body.detail;
      } catch {
        // keep the generic message
      }
      throw new ApiError(resp.status, detail);
    }
    return (await resp.json()) as R;
  }

  methods(): Promise<MethodRecord[]> {
    return this.request<MethodRecord[]>('/methods');
  }

  async methodByAbbr(abbr: string): Promise<MethodRecord> {
    const items = await this.request<MethodRecord[]>(
      `/methods?abbr=${encodeURIComponent(abbr)}`,
    );
    const record = items[0];
    if (!record) throw new ApiError(404, `no method ${abbr}`);
    return record;
  }

  select(descriptors: Descriptors, explain = false): Promise<SelectionResponse> {
    return this.request<SelectionResponse>('/select', {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ descriptors, mode: explain ? 'explain' : 'strict' }),
    });
  }

  rules(level: 1 | 2 | 3): Promise<RuleRecord[]> {
    return this.request<RuleRecord[]>(`/rules?level=${level}`);
  }

  stats(level: 1 | 2 | 3, includeEmpty = false): Promise<StatsRow[]> {
    return this.request<StatsRow[]>(`/stats?level=${level}&include_empty=${includeEmpty}`);
  }
}

import { QUESTIONS, isQuestionVisible } from './questions.js';
import type { Answers, Descriptors, SelectionResponse, SlotName } from './types.js';

export interface HistoryEntry {
  answers: Answers;
  methodCount: number;
}

export interface QuestionnaireState {
  answers: Answers;
  explain: boolean;
  liveResult: SelectionResponse | null;
  history: HistoryEntry[];
  offline: boolean;
  detailAbbr: string | null;
}

const INITIAL: QuestionnaireState = {
  answers: {},
  explain: false,
  liveResult: null,
  history: [],
  offline: false,
  detailAbbr: null,
};

type Listener = (state: QuestionnaireState) => void;

/** Minimal observable store; the API is the single source of selection truth. */
export class Store {
  private state: QuestionnaireState = INITIAL;
  private listeners: Listener[] = [];

  get(): QuestionnaireState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private set(patch: Partial<QuestionnaireState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  /** Record an answer; answers of questions hidden by the change are dropped. */
  answer(slot: SlotName, value: number | 'unknown'): void {
    const answers: Answers = { ...this.state.answers, [slot]: value };
    this.set({ answers: pruneHidden(answers) });
  }

  clearAnswer(slot: SlotName): void {
    const answers = { ...this.state.answers };
    delete answers[slot];
    this.set({ answers: pruneHidden(answers) });
  }

  setExplain(explain: boolean): void {
    this.set({ explain });
  }

  setOffline(offline: boolean): void {
    this.set({ offline });
  }

  showDetails(abbr: string | null): void {
    this.set({ detailAbbr: abbr });
  }

  applyResult(result: SelectionResponse): void {
    this.set({
      liveResult: result,
      offline: false,
      history: [
        ...this.state.history,
        { answers: { ...this.state.answers }, methodCount: result.method_count },
      ],
    });
  }

  reset(): void {
    this.set({ ...INITIAL });
  }
}

/** Drop answers whose question lost its parent; cascades to grandchildren. */
function pruneHidden(answers: Answers): Answers {
  const pruned = { ...answers };
  let changed = true;
  while (changed) {
    changed = false;
    for (const question of QUESTIONS) {
      if (
        pruned[question.slot] !== undefined &&
        question.enabledBy &&
        !isQuestionVisible(question, pruned)
      ) {
        delete pruned[question.slot];
        changed = true;
      }
    }
  }
  return pruned;
}

/**
 * Wire form of the current answers: explicit "don't know" becomes null,
 * unanswered slots are omitted (the service treats both as unknown).
 */
export function buildDescriptors(answers: Answers): Descriptors {
  const payload: Descriptors = {};
  for (const [slot, value] of Object.entries(answers)) {
    payload[slot] = value === 'unknown' ? null : value;
  }
  return payload;
}

export interface RefreshOptions {
  debounceMs?: number;
  setTimeoutFn?: typeof setTimeout;
}

/**
 * Debounced bridge between answer changes and POST /select: coalesces rapid
 * changes and keeps at most one request in flight, re-querying once at the
 * end if the answers moved while a request was out.
 */
export class SelectionController {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inFlight = false;
  private dirty = false;
  private readonly debounceMs: number;
  private readonly setTimeoutFn: typeof setTimeout;

  constructor(
    private readonly store: Store,
    private readonly selectFn: (
      descriptors: Descriptors,
      explain: boolean,
    ) => Promise<SelectionResponse>,
    options: RefreshOptions = {},
  ) {
    this.debounceMs = options.debounceMs ?? 150;
    this.setTimeoutFn = options.setTimeoutFn ?? setTimeout;
  }

  schedule(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = this.setTimeoutFn(() => {
      this.timer = null;
      void this.refresh();
    }, this.debounceMs);
  }

  async refresh(): Promise<void> {
    if (this.inFlight) {
      this.dirty = true;
      return;
    }
    this.inFlight = true;
    const state = this.store.get();
    try {
      const result = await this.selectFn(buildDescriptors(state.answers), state.explain);
      this.store.applyResult(result);
    } catch {
      // inputs are preserved; the view shows the offline banner
      this.store.setOffline(true);
    } finally {
      this.inFlight = false;
    }
    if (this.dirty) {
      this.dirty = false;
      await this.refresh();
    }
  }
}

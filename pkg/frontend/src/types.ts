// Wire types of the selection service (see docs/openapi.json in the repo root).

export type SlotName =
  | 'c1'
  | 'c1.1'
  | 'c2'
  | 'c3'
  | 'c3.1'
  | 'c3.1.1'
  | 'c3.1.2'
  | 'c4'
  | 'c4.1';

export const SLOT_NAMES: SlotName[] = [
  'c1',
  'c1.1',
  'c2',
  'c3',
  'c3.1',
  'c3.1.1',
  'c3.1.2',
  'c4',
  'c4.1',
];

export interface SelectedMethod {
  id: number;
  name: string;
  abbreviation: string;
  description: string | null;
}

export interface SelectionResponse {
  methods: SelectedMethod[];
  activated_rule: string | null;
  method_count: number;
  explanation?: string | null;
}

export interface MethodRecord {
  id: number;
  name: string;
  abbreviation: string;
  characteristics: Record<string, number>;
  description: string | null;
  citation_key: string;
}

export interface RuleRecord {
  label: string;
  level: number;
  pattern: Record<string, number>;
  method_ids: number[];
  method_abbreviations: string[];
}

export interface StatsRow {
  unknowns: number;
  rule_count: number;
  min_methods: number;
  mean_methods: number;
  max_methods: number;
  include_empty: boolean;
}

/** 'unknown' is the explicit "don't know" choice; unanswered slots are absent. */
export type Answer = number | 'unknown';

export type Answers = Partial<Record<SlotName, Answer>>;

export type Descriptors = Record<string, number | null>;

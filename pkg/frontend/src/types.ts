/** JSON shapes of the experiment service. */

export const METRIC_NAMES = [
  "coverage",
  "precision",
  "ndpm",
  "diversity",
  "novelty",
  "serendipity",
  "confidence",
  "perplexity",
] as const;

export type MetricName = (typeof METRIC_NAMES)[number];

export const RECOMMENDER_KINDS = ["most_popular", "random", "unigram", "bigram"] as const;
export type RecommenderKind = (typeof RECOMMENDER_KINDS)[number];

export interface ExperimentConfig {
  input_path: string;
  delimiter: string;
  min_user_ratings: number;
  min_item_ratings: number;
  delta_seconds: number;
  split_strategy: string;
  test_ratio: number;
  k: number;
  recommenders: string[];
  smoothing_alpha: number;
  seed: number;
  output_format: string;
}

export interface Profile {
  num_users: number;
  num_items: number;
  num_ratings: number;
  num_sequences: number;
  avg_sequence_length: number;
  sparsity: number;
}

export interface RecommenderReport {
  recommender: string;
  metrics: Record<MetricName, number>;
}

export type ExperimentStatus = "pending" | "running" | "done" | "failed";

export interface ExperimentRecord {
  id: string;
  status: ExperimentStatus;
  created_at: string;
  config: ExperimentConfig;
  error: string | null;
  profile: Profile | null;
  reports: RecommenderReport[] | null;
}

export interface DatasetEntry {
  name: string;
  path: string;
}

export interface FieldError {
  field: string;
  message: string;
}

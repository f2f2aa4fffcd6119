/** JSON schema of the explorer service (mirrors the HTTP responses). */

export type ComplexPair = [number, number]; // [re, im]

export interface ServiceConfig {
  F: number;
  omega: number;
  Ip: number;
  Z: number;
  gamma: number;
  kappa: number;
  T_periods: number;
  max_grid: [number, number];
}

export interface SaddleResponse {
  ts: ComplexPair;
  t_kappa: ComplexPair;
  t0: number;
  tau_T: number;
  z_exit: number;
}

export interface CAPointJson {
  t: ComplexPair;
  re_v2: number;
  im_sign?: number;
  residual?: number;
}

export interface TcaResponse {
  roots: CAPointJson[];
}

export interface DistanceFieldJson {
  re_axis: number[];
  im_axis: number[];
  re: number[][];
  im: number[][];
  flags: number[][];
}

export interface CutJson {
  branch_point: ComplexPair;
  family: "plus" | "minus";
  crosses_real_axis: boolean;
  points: ComplexPair[];
}

export interface BranchmapResponse {
  field: DistanceFieldJson;
  cuts: CutJson[];
  gates: CAPointJson[];
}

export interface ContourAutoResponse {
  contour: { nodes: ComplexPair[] };
}

export interface ValidationJson {
  continuous: boolean;
  max_jump: number;
  nearest_singularity_distance: number;
  n_flips: number;
}

export interface AmplitudeJson {
  bound_phase: ComplexPair;
  kinetic_action: ComplexPair;
  coulomb_action: ComplexPair;
  log_amplitude: number;
  yield: number;
  sfa_log_amplitude: number;
  sfa_yield: number;
}

export interface ValidateResponse {
  validation: ValidationJson;
  coulomb_action: ComplexPair | null;
  amplitude: AmplitudeJson | null;
}

export interface TrajectoryResponse {
  t: ComplexPair[];
  z: ComplexPair[];
  x: ComplexPair[];
}

import { ApiClient } from './api.js';
import { renderApp } from './app.js';

// Build-time API base; override by defining window.MCDA_API_BASE before load.
const DEFAULT_API_BASE = 'http://127.0.0.1:8571';

declare global {
  interface Window {
    MCDA_API_BASE?: string;
  }
}

const root = document.getElementById('app');
if (!root) throw new Error('missing #app container');
renderApp(root, new ApiClient({ baseUrl: window.MCDA_API_BASE ?? DEFAULT_API_BASE }));

public class TransposeNegatives {

    public static int[][] rotateMatrix90(int[][] a) {
        int n = a.length;
        int[][] b = new int[n][n];
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < n; j++) {
                b[j][n - 1 - i] = a[i][j];
            }
        }
        return b;
    }

    public static int[][] copyMatrix(int[][] a) {
        int rows = a.length;
        int cols = a[0].length;
        int[][] b = new int[rows][cols];
        for (int i = 0; i < rows; i++) {
            for (int j = 0; j < cols; j++) {
                b[i][j] = a[i][j];
            }
        }
        return b;
    }

    public static int[][] identityMatrix(int n) {
        int[][] m = new int[n][n];
        for (int i = 0; i < n; i++) {
            m[i][i] = 1;
        }
        return m;
    }

    public static int sumDiagonal(int[][] m) {
        int total = 0;
        for (int i = 0; i < m.length; i++) {
            total += m[i][i];
        }
        return total;
    }

    public static void scaleMatrix(double[][] m, double k) {
        for (int i = 0; i < m.length; i++) {
            for (int j = 0; j < m[i].length; j++) {
                m[i][j] *= k;
            }
        }
    }

    public static int[][] mirrorRows(int[][] a) {
        int rows = a.length;
        int cols = a[0].length;
        int[][] b = new int[rows][cols];
        for (int i = 0; i < rows; i++) {
            for (int j = 0; j < cols; j++) {
                b[i][j] = a[i][cols - 1 - j];
            }
        }
        return b;
    }

    public static double[] matrixVectorProduct(double[][] a, double[] x) {
        double[] y = new double[a.length];
        for (int i = 0; i < a.length; i++) {
            for (int j = 0; j < a[i].length; j++) {
                y[i] += a[i][j] * x[j];
            }
        }
        return y;
    }

    public static void zeroMatrix(int[][] m) {
        for (int i = 0; i < m.length; i++) {
            for (int j = 0; j < m[i].length; j++) {
                m[i][j] = 0;
            }
        }
    }

    public static int[][] readGrid(java.util.Scanner in, int rows, int cols) {
        int[][] grid = new int[rows][cols];
        for (int r = 0; r < rows; r++) {
            for (int c = 0; c < cols; c++) {
                grid[r][c] = in.nextInt();
            }
        }
        return grid;
    }

    public static void swapRows(int[][] m, int r1, int r2) {
        for (int c = 0; c < m[r1].length; c++) {
            int temp = m[r1][c];
            m[r1][c] = m[r2][c];
            m[r2][c] = temp;
        }
    }
}

public class BinarySearchNegatives {

    public static int linearSearch(int[] arr, int key) {
        for (int i = 0; i < arr.length; i++) {
            if (arr[i] == key) {
                return i;
            }
        }
        return -1;
    }

    public static int ternarySearch(int[] arr, int key) {
        int left = 0;
        int right = arr.length - 1;
        while (left <= right) {
            int third = (right - left) / 3;
            int cut1 = left + third;
            int cut2 = right - third;
            if (arr[cut1] == key) {
                return cut1;
            }
            if (arr[cut2] == key) {
                return cut2;
            }
            if (key < arr[cut1]) {
                right = cut1 - 1;
            } else if (key > arr[cut2]) {
                left = cut2 + 1;
            } else {
                left = cut1 + 1;
                right = cut2 - 1;
            }
        }
        return -1;
    }

    public static int[] findMinMax(int[] data) {
        int min = data[0];
        int max = data[0];
        for (int i = 1; i < data.length; i++) {
            if (data[i] < min) {
                min = data[i];
            }
            if (data[i] > max) {
                max = data[i];
            }
        }
        return new int[] {min, max};
    }

    public static int halveUntilOne(int n) {
        int steps = 0;
        while (n > 1) {
            n = n / 2;
            steps++;
        }
        return steps;
    }

    public static int averageOfTwo(int a, int b) {
        return (a + b) / 2;
    }

    public static int binaryToDecimal(String bits) {
        int result = 0;
        for (int i = 0; i < bits.length(); i++) {
            result = result * 2 + (bits.charAt(i) - '0');
        }
        return result;
    }

    public static int[] mergeSortedArrays(int[] first, int[] second) {
        int[] merged = new int[first.length + second.length];
        int i = 0;
        int j = 0;
        int k = 0;
        while (i < first.length && j < second.length) {
            if (first[i] <= second[j]) {
                merged[k++] = first[i++];
            } else {
                merged[k++] = second[j++];
            }
        }
        while (i < first.length) {
            merged[k++] = first[i++];
        }
        while (j < second.length) {
            merged[k++] = second[j++];
        }
        return merged;
    }

    public static int getMiddleElement(int[] arr) {
        return arr[arr.length / 2];
    }

    public String getLabel() {
        return this.label;
    }

    public static int interpolationSearch(int[] arr, int key) {
        int low = 0;
        int high = arr.length - 1;
        while (low <= high && key >= arr[low] && key <= arr[high]) {
            int span = arr[high] - arr[low];
            if (span == 0) {
                break;
            }
            int pos = low + ((key - arr[low]) * (high - low)) / span;
            if (arr[pos] == key) {
                return pos;
            }
            if (arr[pos] < key) {
                low = pos + 1;
            } else {
                high = pos - 1;
            }
        }
        return -1;
    }

    private String label;
}
